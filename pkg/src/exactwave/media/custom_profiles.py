from warnings import warn
import numpy as np
from numpy.polynomial import Polynomial

from exactwave.base.jets import jet_exp, Jet
from exactwave.media.abstract_profile import AbstractProfile


class CustomProfile(AbstractProfile):

    kind = "custom"

    def __init__(self, func, domain=(-np.inf, np.inf), singular_points=(), base=None,
                 antiderivative=None, name="custom"):
        """ Profile given by a user function returning (K, K', K'').

        Without an antiderivative the travel time is integrated
        numerically from the base point, which is then required.

        Parameters
        ----------
        func : callable
            func(x) -> (K, K', K'') for a numpy array x

        domain : tuple of float, optional

        singular_points : list of float, optional

        base : float, optional

        antiderivative : callable, optional
            A closed-form antiderivative of 1/K

        name : str, optional
            Label used in repr
        """
        if not callable(func):
            raise TypeError("CustomProfile needs a callable func(x) -> (K, K', K'').")
        self.func = func
        self.antiderivative = antiderivative
        self.name = name
        self.poly = None
        super().__init__(domain=domain, singular_points=singular_points, base=base)
        if antiderivative is None:
            warn(f"travel time of {self!r} is integrated numerically", stacklevel=2)

    @classmethod
    def from_polynomial(cls, coefficients, domain=(-np.inf, np.inf), base=None):
        """ K(x) = sum_k coefficients[k] x^k; the real roots of K inside
        the domain become singular points
        """
        poly = Polynomial(coefficients)
        d1, d2 = poly.deriv(1), poly.deriv(2)
        roots = [r.real for r in poly.roots() if abs(r.imag) < 1e-12]
        out = cls(lambda x: (poly(x), d1(x), d2(x)), domain=domain, singular_points=roots,
                  base=base, name="poly")
        out.poly = [float(c) for c in coefficients]
        return out

    def _k_derivatives(self, x):
        K, K1, K2 = self.func(x)
        zero = np.zeros_like(x)
        return (K + zero, K1 + zero, K2 + zero)

    def _antiderivative(self, x):
        if self.antiderivative is None:
            return None
        return self.antiderivative(x)

    def _descriptor(self):
        if self.poly is not None:
            return {"poly": self.poly, "domain": list(self.domain)}
        return {"name": self.name}


class CylindricalProfile(AbstractProfile):

    kind = "cylindrical"

    def __init__(self, radial):
        """ The profile in y of the radial equation after r = e^y:

            K_y(y) = K_r(e^y) e^{-y}

        so that K_y^2 = c^2(e^y) e^{-2y}. The travel time in y equals
        the radial travel time at r = e^y.

        Parameters
        ----------
        radial : AbstractProfile
            The speed c(r) as a profile in r
        """
        self.radial = radial
        lo, hi = radial.domain
        domain = (np.log(lo) if lo > 0 else -np.inf, np.log(hi))
        singular = [np.log(p) for p in radial.singular_points if p > 0]
        base = None if radial.base is None else np.log(radial.base)
        super().__init__(domain=domain, singular_points=singular, base=base)

    def _k_derivatives(self, y):
        Y = Jet.variable(y, 2)
        R = jet_exp(Y)
        K_r = self.radial.jet(R.value, 2).compose(R)
        return (K_r * jet_exp(-Y)).coeffs

    def _antiderivative(self, y):
        return self.radial.travel_time(np.exp(y))

    def _antiderivative_inverse(self, tau):
        return np.log(self.radial.inverse_travel_time(tau))

    def _descriptor(self):
        return {"radial": self.radial.to_dict()}
