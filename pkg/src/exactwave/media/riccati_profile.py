import logging
import numpy as np

from exactwave.base.errors import ContractError, DomainError
from exactwave.base.jets import Jet
from exactwave.media.abstract_profile import AbstractProfile
from exactwave.riccati import ClosedFormFamily, invert_monotone

logger = logging.getLogger(__name__)

# points closer than this to a zero of A1 are rejected
LEAD_FLOOR = 1e-6


class RiccatiProfile(AbstractProfile):

    kind = "riccati_implicit"

    def __init__(self, family, y_bracket, base=None):
        """ Class representing the profile defined implicitly by a
        closed-form solution x(y) of the Riccati equation, y = a(x)
        being the solution of a' = r/A1^2 with A1 = m x + m1 - (c1 x + c2) a.

        The speed is K = A1^2/|r| and the travel time is sign(r) y.
        a(x) is obtained by monotone inversion of x(y) on the bracket,
        its derivatives in closed form from

            a' = r/A1^2,  a'' = -2 r A1'/A1^3,  A1' = m - c1 a - (c1 x + c2) a'

        Parameters
        ----------
        family : ClosedFormFamily or str
            The closed-form family

        y_bracket : tuple of float
            Interval of y free of poles, on which x(y) is monotone;
            zeros of A1 inside it become singular points

        base : float, optional
            Base point of the travel time. Without it the travel time
            is sign(r) a(x)


        Attributes
        ----------
        family : ClosedFormFamily

        params : RiccatiParams

        y_bracket : tuple of float
        """
        if isinstance(family, str):
            family = ClosedFormFamily(family)
        self.family = family
        self.params = family.params
        y_lo, y_hi = sorted(map(float, y_bracket))
        if family.poles(y_lo, y_hi):
            raise ContractError(f"y bracket [{y_lo}, {y_hi}] contains a pole of the "
                                f"{family.name} family")
        self.y_bracket = (y_lo, y_hi)
        self.sign = 1.0 if self.params.r > 0 else -1.0
        x_ends = sorted(float(family.x(y)) for y in self.y_bracket)
        singular = [float(family.x(y)) for y in family.critical_points(y_lo, y_hi)]
        super().__init__(domain=x_ends, singular_points=singular, base=base)

    def riccati_params(self):
        return self.params

    def invert(self, x):
        """ y = a(x), inverted on the bracket """
        x = np.asarray(x, dtype=float)
        unique, index = np.unique(x, return_inverse=True)
        ys = np.array([invert_monotone(self.family, xi, self.y_bracket) for xi in unique])
        logger.debug("%r: inverted %d distinct points", self, len(unique))
        return ys[index].reshape(x.shape)

    def riccati_jet(self, x, order=2):
        if not 0 <= order <= 2:
            raise ContractError(f"travel-time jets are available up to order 2, got {order}")
        self._check_interior(x)
        x = np.asarray(x, dtype=float)
        p = self.params
        y = self.invert(x)
        lead = p.lead(x, y)
        if np.any(np.abs(lead) < LEAD_FLOOR):
            raise DomainError(f"{self!r} evaluated within {LEAD_FLOOR} of a zero of A1")
        dy = p.r / lead**2
        dlead = p.m - p.c1 * y - p.amplitude(x) * dy
        d2y = -2.0 * p.r * dlead / lead**3
        return Jet((y, dy, d2y)[:order + 1])

    def _lead_jet(self, x):
        X = Jet.variable(x, 2)
        Y = self.riccati_jet(x, 2)
        p = self.params
        return p.m * X + p.m1 - (p.c1 * X + p.c2) * Y

    def _k_derivatives(self, x):
        lead = self._lead_jet(x)
        return (lead * lead / abs(self.params.r)).coeffs

    def _antiderivative(self, x):
        return self.sign * self.invert(x)

    def _antiderivative_inverse(self, y):
        y = self.sign * np.asarray(y, dtype=float)
        if np.any((y < self.y_bracket[0]) | (y > self.y_bracket[1])):
            raise DomainError(f"travel time {y} is outside the bracket of {self!r}")
        return self.family.x(y)

    def _descriptor(self):
        return {"family": self.family.name, "b": self.family.b,
                "y_bracket": list(self.y_bracket)}
