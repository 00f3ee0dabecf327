from dataclasses import dataclass
import numpy as np

from exactwave.base.errors import ContractError, DomainError
from exactwave.base.jets import Jet
from exactwave.media.custom_profiles import CylindricalProfile
from exactwave.solutions.exact_solution import ExactSolution1D


def change_of_variable_1d(profile):
    """ Function to reduce u_tt = K^2 u_xx with y = a(x) to

        v_tt = v_yy + s(y) v_y,   s = a''/(a')^2 = -K'(x(y))

    Parameters
    ----------
    profile : AbstractProfile
        With a travel time that can be inverted

    Returns
    -------
    callable
        s(y)
    """
    def coefficient(y):
        x = profile.inverse_travel_time(y)
        K, K1 = profile.jet(x, 1).coeffs
        if not np.all(K > 0):
            raise ContractError(f"travel time of {profile!r} is not monotone at y={y}")
        return -K1
    return coefficient


EPD_NOTE = ("coefficient beta/((beta - 1) y) with beta the exponent of K; a form without "
            "the 1/y factor, or with the exponent of K^2 in place of beta, does not follow "
            "from the change of variables")


@dataclass(frozen=True)
class EPDReduction:
    """ The reduction of u_tt = x^(2 beta) u_xx to the
    Euler-Poisson-Darboux equation v_tt = v_yy + s(y) v_y
    """
    beta: float
    note: str = EPD_NOTE

    def substitution(self, x):
        b = self.beta
        return np.asarray(x, dtype=float)**(1.0 - b) / (1.0 - b)

    def coefficient(self, y):
        y = np.asarray(y, dtype=float)
        if self.beta == 0:
            return np.zeros_like(y)
        return self.beta / ((self.beta - 1.0) * y)

    def to_dict(self):
        return {"beta": self.beta, "mu": self.beta / (self.beta - 1.0), "note": self.note}


def epd_reduce(beta):
    """ beta is the exponent of K = x^beta; beta = 1 has no power
    substitution and is refused
    """
    if beta == 1:
        raise ContractError("K = x has a logarithmic travel time, no power substitution")
    return EPDReduction(float(beta))


class SphericalSolution(ExactSolution1D):

    def __init__(self, radial):
        """ p(t, r) = v(t, r)/r, which solves
        p_tt = c^2(r) (p_rr + (2/r) p_r) when v solves v_tt = c^2(r) v_rr
        """
        self.radial = radial
        self.label = f"spherical({radial.label})"

    def x_jet(self, t, x, order=2, t_order=0):
        r = np.asarray(x, dtype=float)
        if np.any(r <= 0):
            raise DomainError("spherical solutions need r > 0")
        v = self.radial.x_jet(t, r, order, t_order)
        inverse_r = np.array([1.0, -1.0, 2.0, -6.0])[:order + 1]
        return v * Jet([c / r**(k + 1) for k, c in enumerate(inverse_r)])

    def recover(self, t, r):
        """ r p, which equals the radial solution """
        return np.asarray(r, dtype=float) * self(t, r)


def spherical_reduce(v):
    return SphericalSolution(v)


def residual_spherical(p, profile, t, r):
    """ p_tt - c^2 (p_rr + (2/r) p_r) with c = K(r) """
    r = np.asarray(r, dtype=float)
    c = profile.jet(r, 0).value
    jet = p.x_jet(t, r, 2)
    return p.u_tt(t, r) - c**2 * (jet.coeffs[2] + 2.0 * jet.coeffs[1] / r)


def cylindrical_reduce(radial_profile):
    """ The profile K_y(y) = c(e^y) e^{-y} of the equation obtained with r = e^y """
    return CylindricalProfile(radial_profile)
