import logging
from dataclasses import dataclass, field
import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import brentq

from exactwave.base.errors import BlowUpError, ContractError, DomainError, NoRootError

logger = logging.getLogger(__name__)

SQRT3 = np.sqrt(3.0)

# distance kept from a pole when integrating a family up to it
POLE_GAP = 1e-6


@dataclass(frozen=True)
class RiccatiParams:
    """ Constants of the travel-time equation

        a' = r / (m x + m1 - (c1 x + c2) a)^2

    and of its Riccati form dx/dy = (m x + m1 - (c1 x + c2) y)^2 / r,
    where y = a(x). The amplitude of the rank-1 solution is
    A = c1 x + c2 and its lead coefficient A1 = m x + m1 - a A.
    """
    r: float
    m: float
    m1: float
    c1: float
    c2: float

    def __post_init__(self):
        values = (self.r, self.m, self.m1, self.c1, self.c2)
        if not np.all(np.isfinite(values)):
            raise ContractError(f"Riccati constants must be finite, got {values}")
        if self.r == 0:
            raise ContractError("Riccati constant r must be nonzero")

    def amplitude(self, x):
        return self.c1 * x + self.c2

    def lead(self, x, a):
        return self.m * x + self.m1 - self.amplitude(x) * a

    def rhs(self, y, x):
        return self.lead(x, y)**2 / self.r

    def to_dict(self):
        return {"r": self.r, "m": self.m, "m1": self.m1, "c1": self.c1, "c2": self.c2}


FAMILY_PARAMS = {
    "tanh": RiccatiParams(r=1.0, m=1.0, m1=0.0, c1=0.0, c2=1.0),
    "tan": RiccatiParams(r=-1.0, m=1.0, m1=0.0, c1=0.0, c2=1.0),
    "exp_ratio": RiccatiParams(r=1.0, m=1.0, m1=-1.0, c1=1.0, c2=0.0),
    "sqrt3": RiccatiParams(r=1.0, m=1.0, m1=-2.0, c1=1.0, c2=1.0),
}

DEFAULT_B = {"tanh": -1.0, "tan": 0.0, "exp_ratio": 1.0, "sqrt3": 1.0}


@dataclass(frozen=True)
class ClosedFormFamily:
    """ A closed-form solution x(y) of the Riccati equation.

    Families, with b the constant of integration:

        tanh       x = y - (b e^{2y} + 1)/(b e^{2y} - 1)
                   (b < 0: y - tanh(y + ln(-b)/2), b > 0: the coth branch,
                   b = 0: y + 1)
        tan        x = y - tan(y + b)
        exp_ratio  x = -(b + e^{2y})/(b y + (y - 2) e^{2y})
        sqrt3      x = -[(s - 3y - 6) + R (s + 3y + 6)] / [(s - 3y + 3) + R (s + 3y - 3)]
                   with s = sqrt(3), R = b e^{-2 s y}

    Parameters
    ----------
    name : str
        One of tanh, tan, exp_ratio, sqrt3

    b : float, optional
        Constant of integration, defaults per family
    """
    name: str
    b: float = None
    params: RiccatiParams = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.name not in FAMILY_PARAMS:
            raise ContractError(f"unknown closed-form family {self.name!r}, expected one of "
                                f"{sorted(FAMILY_PARAMS)}")
        b = DEFAULT_B[self.name] if self.b is None else float(self.b)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "params", FAMILY_PARAMS[self.name])

    def denominator(self, y):
        """ The quantity whose zeros are the poles of x(y) """
        y = np.asarray(y, dtype=float)
        if self.name == "tanh":
            if self.b > 0:
                return np.tanh(y + 0.5 * np.log(self.b))
            return np.ones_like(y)
        if self.name == "tan":
            return np.cos(y + self.b)
        if self.name == "exp_ratio":
            # scaled by e^{-2y}
            return self.b * y * np.exp(-2.0 * y) + y - 2.0
        R = self.b * np.exp(-2.0 * SQRT3 * y)
        return (SQRT3 - 3.0 * y + 3.0) + R * (SQRT3 + 3.0 * y - 3.0)

    def _numerator(self, y):
        if self.name == "exp_ratio":
            return -(self.b * np.exp(-2.0 * y) + 1.0)
        R = self.b * np.exp(-2.0 * SQRT3 * y)
        return -((SQRT3 - 3.0 * y - 6.0) + R * (SQRT3 + 3.0 * y + 6.0))

    def x(self, y):
        """ Function to evaluate x(y)

        Parameters
        ----------
        y : float or numpy array

        Returns
        -------
        float or numpy array

        Raises
        ------
        DomainError
            If y is at (or numerically on top of) a pole
        """
        y = np.asarray(y, dtype=float)
        den = self.denominator(y)
        if np.any(np.abs(den) < 1e-14):
            raise DomainError(f"{self.name} family evaluated at a pole near y={y}")
        if self.name == "tanh":
            if self.b < 0:
                return y - np.tanh(y + 0.5 * np.log(-self.b))
            if self.b > 0:
                return y - 1.0 / den
            return y + 1.0
        if self.name == "tan":
            return y - np.tan(y + self.b)
        return self._numerator(y) / den

    def dxdy(self, y):
        return self.params.rhs(y, self.x(y))

    def lead(self, y):
        """ A1 along the curve, whose zeros are the critical points of x(y) """
        return self.params.lead(self.x(y), y)

    def _scan_zeros(self, func, y0, y1, n):
        lo, hi = min(y0, y1), max(y0, y1)
        ys = np.linspace(lo, hi, n)
        with np.errstate(all="ignore"):
            values = func(ys)
        zeros = []
        for k in range(n - 1):
            if values[k] == 0.0:
                zeros.append(ys[k])
            elif np.sign(values[k]) * np.sign(values[k + 1]) < 0:
                zeros.append(brentq(lambda y: float(func(y)), ys[k], ys[k + 1], xtol=1e-15))
        return zeros

    def poles(self, y0, y1, n=4001):
        """ Function returning the poles of x(y) between y0 and y1,
        sorted in the direction of integration from y0 to y1
        """
        poles = self._scan_zeros(self.denominator, y0, y1, n)
        return sorted(poles, reverse=y1 < y0)

    def critical_points(self, y0, y1, n=4001):
        """ Zeros of dx/dy between y0 and y1, which must be pole-free """
        if self.poles(y0, y1, n):
            raise ContractError(f"[{y0}, {y1}] contains a pole of the {self.name} family")
        return sorted(self._scan_zeros(self.lead, y0, y1, n))

    def critical_value(self):
        """ (y*, x*) of the tanh branch with b < 0 """
        if self.name != "tanh" or self.b >= 0:
            return None
        y_star = -0.5 * np.log(-self.b)
        return y_star, y_star

    def default_bracket(self, x):
        """ A bracket known to contain the preimage of x. Only the
        tanh family with b < 0 is monotone on the whole line, every
        other branch needs an explicit bracket.
        """
        if self.name == "tanh" and self.b < 0:
            return (x - 1.0, x + 1.0)
        raise ContractError(f"the {self.name} family needs an explicit monotone bracket")

    def to_dict(self):
        return {"family": self.name, "b": self.b}


@dataclass
class RiccatiPath:
    """ Sampled solution of the Riccati equation """
    y: np.ndarray
    x: np.ndarray
    dense: object = None
    pole: float = None
    nfev: int = 0

    def at(self, y):
        if self.dense is None:
            if np.any(np.asarray(y) != self.y[0]):
                raise ContractError("zero-length path can only be evaluated at its start")
            return np.full_like(np.asarray(y, dtype=float), self.x[0])
        return self.dense(y)[0]


def closed_form_x(family, y):
    return family.x(y)


def riccati_rhs(params, y, x):
    return params.rhs(y, x)


def integrate_ode(params, y0, x0, y_end, rtol=1e-10, atol=1e-12, max_abs=1e8, n_samples=None):
    """ Function to integrate dx/dy = (m x + m1 - (c1 x + c2) y)^2 / r
    with an embedded 8th order Runge-Kutta method and dense output.

    Parameters
    ----------
    params : RiccatiParams

    y0, x0 : float
        Initial point

    y_end : float
        End of the integration span, may be smaller than y0

    rtol, atol : float, optional
        Local error tolerances

    max_abs : float, optional, default is 1e8
        |x| above which the solution is treated as blown up

    n_samples : int, optional
        If given, the path is resampled on that many equally spaced
        points from the dense output

    Returns
    -------
    RiccatiPath

    Raises
    ------
    BlowUpError
        If |x| exceeds max_abs or the step size underflows; carries
        the last y integrated successfully
    """
    if y_end == y0:
        return RiccatiPath(y=np.array([float(y0)]), x=np.array([float(x0)]))

    def blow_up(y, x):
        return max_abs - abs(x[0])
    blow_up.terminal = True

    sol = solve_ivp(lambda y, x: params.rhs(y, x), (y0, y_end), [x0], method="DOP853",
                    rtol=rtol, atol=atol, dense_output=True, events=blow_up)
    logger.debug("Riccati integration %s from y=%g to %g: status %d, %d steps, %d evaluations",
                 params, y0, y_end, sol.status, len(sol.t), sol.nfev)
    if sol.status != 0:
        raise BlowUpError(f"Riccati integration stopped at y={sol.t[-1]:.12g}: {sol.message}",
                          last_valid=float(sol.t[-1]))

    if n_samples is None:
        return RiccatiPath(y=sol.t, x=sol.y[0], dense=sol.sol, nfev=sol.nfev)
    ys = np.linspace(y0, y_end, n_samples)
    return RiccatiPath(y=ys, x=sol.sol(ys)[0], dense=sol.sol, nfev=sol.nfev)


def integrate_family(family, y0, y_end, n_samples=None, **kwargs):
    """ Integrate the Riccati equation of a closed-form family from its
    own value at y0, stopping POLE_GAP before the first pole in the way.
    The returned path records that pole, or None.
    """
    poles = family.poles(y0, y_end)
    pole = None
    if poles:
        pole = poles[0]
        y_end = pole - POLE_GAP if y_end > y0 else pole + POLE_GAP
        logger.warning("%s family (b=%g) has a pole at y=%.12g, integration stops at y=%.12g",
                       family.name, family.b, pole, y_end)
    path = integrate_ode(family.params, y0, float(family.x(y0)), y_end,
                         n_samples=n_samples, **kwargs)
    path.pole = pole
    return path


def invert_monotone(family, x, bracket=None, tol=1e-12, maxiter=200):
    """ Function to find y with family.x(y) = x on a monotone bracket.

    Safeguarded Newton iteration: a Newton step is taken only when it
    stays inside the current bracket and shrinks it fast enough,
    otherwise the bracket is bisected. Near the critical point of the
    tanh family, where dx/dy vanishes, the iteration starts from the
    local cubic model x - x* = (y - y*)^3 / 3.

    Parameters
    ----------
    family : ClosedFormFamily

    x : float
        The target value

    bracket : tuple of float, optional
        Interval of y on which x(y) is monotone. Defaults to
        family.default_bracket(x)

    tol : float, optional, default is 1e-12
        Required |x(y) - x|, raised to 4 eps |x| where rounding of x
        does not allow tol

    Returns
    -------
    float

    Raises
    ------
    NoRootError
        If x is not in the image of the bracket
    """
    x = float(x)
    lo, hi = family.default_bracket(x) if bracket is None else map(float, bracket)
    target = max(tol, 4.0 * np.finfo(float).eps * abs(x))

    def f(y):
        return float(family.x(y)) - x

    f_lo, f_hi = f(lo), f(hi)
    if abs(f_lo) <= target:
        return lo
    if abs(f_hi) <= target:
        return hi
    if np.sign(f_lo) == np.sign(f_hi):
        raise NoRootError(f"x={x} is outside the image [{f_lo + x:.6g}, {f_hi + x:.6g}] "
                          f"of the {family.name} family on [{lo}, {hi}]")
    # orient so that f(lo) < 0 < f(hi)
    if f_lo > 0:
        lo, hi = hi, lo

    y = 0.5 * (lo + hi)
    critical = family.critical_value()
    if critical is not None:
        y_star, x_star = critical
        guess = y_star + np.cbrt(3.0 * (x - x_star))
        if min(lo, hi) < guess < max(lo, hi):
            y = guess

    step_old = abs(hi - lo)
    step = step_old
    for _ in range(maxiter):
        fy = f(y)
        if abs(fy) <= target:
            return y
        if fy < 0:
            lo = y
        else:
            hi = y
        slope = float(family.dxdy(y))
        newton = y - fy / slope if slope != 0.0 else np.nan
        inside = np.isfinite(newton) and min(lo, hi) < newton < max(lo, hi)
        if inside and abs(newton - y) < 0.5 * step_old:
            step_old, step = step, abs(newton - y)
            y = newton
        else:
            step_old, step = step, 0.5 * abs(hi - lo)
            y = 0.5 * (lo + hi)
        if abs(hi - lo) < 4.0 * np.finfo(float).eps * max(1.0, abs(y)):
            break
    if abs(f(y)) <= target:
        return y
    raise NoRootError(f"inversion of the {family.name} family did not converge for x={x}")
