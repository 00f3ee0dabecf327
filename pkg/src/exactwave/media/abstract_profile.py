from abc import ABC, abstractmethod
import logging
import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from exactwave.base.errors import ContractError, DomainError, NoRootError
from exactwave.base.jets import Jet

logger = logging.getLogger(__name__)

QUAD_EPSABS = 1e-12
QUAD_LIMIT = 2**15


class AbstractProfile(ABC):

    kind = None

    def __init__(self, domain=(-np.inf, np.inf), singular_points=(), base=None):
        """ Abstract class representing a sound-speed profile K(x) of
        the equation u_tt = K(x)^2 u_xx.

        The singular points (zeros of K, poles of K') split the domain
        into connected components; travel times are never integrated
        across them.

        Parameters
        ----------
        domain : tuple of float, optional
            Open interval on which K is defined, defaults to the real line

        singular_points : list of float, optional
            Points inside the domain that are excluded

        base : float, optional
            Base point x0 of the travel time, a(x0) = 0. If not given,
            the natural closed-form antiderivative of 1/K is used


        Attributes
        ----------
        kind : str
            Name of the profile family

        domain : tuple of float
            The open interval of definition

        singular_points : tuple of float
            Excluded points inside the domain

        base : float or None
            Base point of the travel time


        Methods
        -------
        jet
            Function returning (K, K', K'') as a Jet

        laplace_invariant
            Function returning h = K K''/2 - (K'/2)^2

        travel_time
            Function returning a(x) = integral of dx/K

        characteristics
            Function returning (t + a(x), t - a(x))

        inverse_travel_time
            Function returning x with a(x) = y

        """
        lo, hi = map(float, domain)
        if not lo < hi:
            raise ContractError(f"empty profile domain ({lo}, {hi})")
        self.domain = (lo, hi)
        self.singular_points = tuple(sorted(float(p) for p in singular_points
                                            if lo < p < hi))
        if base is not None:
            base = float(base)
            if not self.is_interior(base):
                raise DomainError(f"travel-time base point {base} is not interior to "
                                  f"the domain of {self!r}")
        self.base = base
        logger.debug("%r: domain %s, singular points %s, base %s",
                     self, self.domain, self.singular_points, self.base)

    @abstractmethod
    def _k_derivatives(self, x):
        """ Function to calculate K and its first two derivatives

        Parameters
        ----------
        x : numpy array
            Interior points

        Returns
        -------
        tuple
            (K, K', K'') with the shape of x

        """
        return None

    def _antiderivative(self, x):
        """ A closed-form antiderivative of 1/K, or None """
        return None

    def _antiderivative_inverse(self, y):
        """ Inverse of _antiderivative, or None """
        return None

    def is_interior(self, x):
        x = np.asarray(x, dtype=float)
        lo, hi = self.domain
        ok = np.isfinite(x) & (x > lo) & (x < hi)
        for p in self.singular_points:
            ok &= x != p
        return bool(np.all(ok))

    def _check_interior(self, x):
        if not self.is_interior(x):
            raise DomainError(f"{self!r} evaluated outside its domain {self.domain} "
                              f"or at a singular point {self.singular_points}")

    def component(self, x):
        """ The connected piece of the domain containing x """
        self._check_interior(x)
        edges = (self.domain[0],) + self.singular_points + (self.domain[1],)
        k = int(np.searchsorted(edges, x))
        return (edges[k - 1], edges[k])

    def same_component(self, x0, x):
        x = np.atleast_1d(np.asarray(x, dtype=float))
        c0 = self.component(x0)
        return bool(np.all((x > c0[0]) & (x < c0[1])))

    def reference_interval(self, margin=0.05):
        """ A finite interval inside the component of the base point
        (or the first component) shrunk by margin times its width,
        used to sample construction checks
        """
        edges = (self.domain[0],) + self.singular_points + (self.domain[1],)
        if self.base is not None:
            lo, hi = self.component(self.base)
        else:
            lo, hi = edges[0], edges[1]
        if np.isinf(lo) and np.isinf(hi):
            lo, hi = -1.0, 1.0
        elif np.isinf(lo):
            lo = hi - 2.0
        elif np.isinf(hi):
            hi = lo + 2.0
        width = hi - lo
        return (lo + margin * width, hi - margin * width)

    def jet(self, x, order=2):
        """ Function to evaluate K at x as a Jet of order at most 2

        Raises
        ------
        DomainError
            If x is not interior to the domain or K(x) <= 0
        """
        if not 0 <= order <= 2:
            raise ContractError(f"profile jets are available up to order 2, got {order}")
        self._check_interior(x)
        x = np.asarray(x, dtype=float)
        coeffs = self._k_derivatives(x)
        if not np.all(np.asarray(coeffs[0]) > 0):
            raise DomainError(f"{self!r} is not positive at {x}")
        return Jet(coeffs[:order + 1])

    def __call__(self, x):
        return self.jet(x, 0).value

    def laplace_invariant(self, x):
        K, K1, K2 = self.jet(x).coeffs
        return 0.5 * K * K2 - (0.5 * K1)**2

    def travel_time(self, x):
        """ Function to calculate a(x) = integral from base to x of ds/K(s)

        Uses the closed form when the profile has one, otherwise
        adaptive Gauss-Kronrod quadrature with absolute tolerance 1e-12.

        Parameters
        ----------
        x : float or numpy array

        Returns
        -------
        float or numpy array

        Raises
        ------
        DomainError
            If x and the base point lie in different components
        """
        self._check_interior(x)
        x = np.asarray(x, dtype=float)
        if self.base is not None and not self.same_component(self.base, x):
            raise DomainError(f"cannot integrate 1/K of {self!r} from {self.base} to {x} "
                              f"across a singular point {self.singular_points}")
        natural = self._antiderivative(x)
        if natural is not None:
            if self.base is None:
                return natural
            return natural - self._antiderivative(np.asarray(self.base))
        if self.base is None:
            raise ContractError(f"{self!r} has no closed-form travel time, "
                                f"a base point is required")
        return self._quad_travel_time(x)

    def _quad_travel_time(self, x):
        def integrand(s):
            return 1.0 / float(self(s))

        def one(xi):
            value, abserr = quad(integrand, self.base, xi, epsabs=QUAD_EPSABS,
                                 epsrel=0.0, limit=QUAD_LIMIT)
            logger.debug("quadrature of 1/K from %g to %g: %.17g (error %.3g)",
                         self.base, xi, value, abserr)
            return value
        return np.vectorize(one, otypes=[float])(x)

    def travel_time_jet(self, x, order=2):
        """ The jet (a, 1/K, -K'/K^2) of the travel time """
        if not 0 <= order <= 2:
            raise ContractError(f"travel-time jets are available up to order 2, got {order}")
        K, K1 = self.jet(x, 1).coeffs
        return Jet((self.travel_time(x), 1.0 / K, -K1 / K**2)[:order + 1])

    def characteristics(self, t, x):
        a = self.travel_time(x)
        return (t + a, t - a)

    def inverse_travel_time(self, y, bracket=None):
        """ Function returning x with travel_time(x) = y

        Parameters
        ----------
        y : float or numpy array

        bracket : tuple of float, optional
            Interval of x searched when there is no closed form;
            defaults to the reference interval of the profile widened
            to its component

        Raises
        ------
        NoRootError
            If y is not reached inside the bracket
        """
        y = np.asarray(y, dtype=float)
        shift = 0.0 if self.base is None else self._antiderivative(np.asarray(self.base))
        if shift is not None:
            x = self._antiderivative_inverse(y + shift)
            if x is not None:
                return x
        if bracket is None:
            bracket = self.reference_interval(margin=1e-9)
        lo, hi = map(float, bracket)

        def one(yi):
            f_lo, f_hi = self.travel_time(lo) - yi, self.travel_time(hi) - yi
            if np.sign(f_lo) == np.sign(f_hi):
                raise NoRootError(f"travel time {yi} is not reached on [{lo}, {hi}] "
                                  f"for {self!r}")
            return brentq(lambda s: float(self.travel_time(s)) - yi, lo, hi, xtol=1e-14)
        return np.vectorize(one, otypes=[float])(y)

    def riccati_params(self):
        """ Constants of a' = r/A1^2 matching this profile's travel time,
        available only for profiles carrying rank-1 solutions
        """
        raise ContractError(f"{self!r} has no rank-1 representation")

    def riccati_jet(self, x, order=2):
        """ Jet of the function a solving a' = r/A1^2 for riccati_params """
        raise ContractError(f"{self!r} has no rank-1 representation")

    def to_dict(self):
        out = {"kind": self.kind}
        out.update(self._descriptor())
        if self.base is not None:
            out["base"] = self.base
        return out

    def _descriptor(self):
        return {}

    def __repr__(self):
        args = ", ".join(f"{k}={v}" for k, v in self._descriptor().items())
        return f"{self.kind}({args})"
