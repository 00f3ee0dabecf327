import numpy as np

from exactwave.base.errors import ContractError, DomainError
from exactwave.base.jets import Jet
from exactwave.media.abstract_profile import AbstractProfile
from exactwave.riccati import RiccatiParams


class ConstantProfile(AbstractProfile):

    kind = "constant"

    def __init__(self, speed=1.0, base=None):
        """ Class representing a constant speed K(x) = speed > 0 """
        if speed <= 0:
            raise ContractError("constant speed must be positive")
        self.speed = float(speed)
        super().__init__(base=base)

    def _k_derivatives(self, x):
        zero = np.zeros_like(x)
        return (zero + self.speed, zero, zero)

    def _antiderivative(self, x):
        return x / self.speed

    def _antiderivative_inverse(self, y):
        return self.speed * y

    def _descriptor(self):
        return {"speed": self.speed}


class PowerLawProfile(AbstractProfile):

    kind = "power_law"

    def __init__(self, alpha, base=None):
        """ Class representing K(x)^2 = x^alpha on x > 0

        Parameters
        ----------
        alpha : float
            Exponent of K^2, so K = x^(alpha/2)

        base : float, optional
            Base point of the travel time


        Attributes
        ----------
        alpha : float
            Exponent of K^2

        beta : float
            Exponent of K
        """
        self.alpha = float(alpha)
        self.beta = 0.5 * self.alpha
        super().__init__(domain=(0.0, np.inf), base=base)

    def _k_derivatives(self, x):
        b = self.beta
        return (x**b, b * x**(b - 1.0), b * (b - 1.0) * x**(b - 2.0))

    def _antiderivative(self, x):
        if self.beta == 1.0:
            return np.log(x)
        return x**(1.0 - self.beta) / (1.0 - self.beta)

    def _antiderivative_inverse(self, y):
        if self.beta == 1.0:
            return np.exp(y)
        z = (1.0 - self.beta) * np.asarray(y, dtype=float)
        if np.any(z <= 0):
            raise DomainError(f"travel time {y} is outside the range of {self!r}")
        return z**(1.0 / (1.0 - self.beta))

    def invariant_closed_form(self, x):
        """ h = x^(alpha-2) alpha (alpha-4) / 16 """
        a = self.alpha
        return np.asarray(x, dtype=float)**(a - 2.0) * a * (a - 4.0) / 16.0

    def _descriptor(self):
        return {"alpha": self.alpha}


class QuadraticProfile(AbstractProfile):

    kind = "quadratic"

    def __init__(self, m1, m2, base=None):
        """ Class representing K(x) = (m1 x + m2)^2, the family with
        vanishing Laplace invariant. The zero of the amplitude
        A = m1 x + m2 is a singular point.

        Parameters
        ----------
        m1, m2 : float
            Coefficients of the amplitude, not both zero

        base : float, optional
            Base point of the travel time. Without it the travel time
            is a = -1/(m1 A), or x/m2^2 when m1 = 0
        """
        if m1 == 0 and m2 == 0:
            raise ContractError("quadratic profile needs m1 or m2 nonzero")
        self.m1 = float(m1)
        self.m2 = float(m2)
        singular = () if self.m1 == 0 else (-self.m2 / self.m1,)
        super().__init__(singular_points=singular, base=base)

    def amplitude_jet(self, x, order=2):
        x = np.asarray(x, dtype=float)
        return Jet((self.m1 * x + self.m2, self.m1 + 0.0 * x, 0.0 * x, 0.0 * x)[:order + 1])

    def _k_derivatives(self, x):
        A = self.m1 * x + self.m2
        return (A**2, 2.0 * self.m1 * A, 2.0 * self.m1**2 + 0.0 * x)

    def _antiderivative(self, x):
        if self.m1 == 0:
            return x / self.m2**2
        return -1.0 / (self.m1 * (self.m1 * x + self.m2))

    def _antiderivative_inverse(self, y):
        y = np.asarray(y, dtype=float)
        if self.m1 == 0:
            return self.m2**2 * y
        if np.any(y == 0):
            raise DomainError(f"travel time 0 is not reached by {self!r}")
        return (-1.0 / (self.m1 * y) - self.m2) / self.m1

    def _descriptor(self):
        return {"m1": self.m1, "m2": self.m2}


class GenEulerProfile(AbstractProfile):

    kind = "gen_euler"

    def __init__(self, s1, s2, c1, c2, base=None):
        """ Class representing the generalized Euler profile whose
        travel time is

            a(x) = d ((c1 x + c2)/(s1 x + s2))^(1/3),  d = 3/(c1 s2 - c2 s1)

        which gives K = |c1 x + c2|^(2/3) |s1 x + s2|^(4/3). Cube roots
        of negative arguments are real odd roots, so the travel time is
        defined on both sides of the zeros of the linear factors; those
        zeros are singular points.

        Parameters
        ----------
        s1, s2, c1, c2 : float
            Coefficients of the linear factors, c1 s2 - c2 s1 nonzero

        base : float, optional
            Base point of the travel time
        """
        det = c1 * s2 - c2 * s1
        if det == 0:
            raise ContractError("gen_euler profile needs c1*s2 - c2*s1 != 0")
        self.s1, self.s2, self.c1, self.c2 = map(float, (s1, s2, c1, c2))
        self.d = 3.0 / det
        singular = [-self.c2 / self.c1] if self.c1 != 0 else []
        if self.s1 != 0:
            singular.append(-self.s2 / self.s1)
        super().__init__(singular_points=singular, base=base)

    def _k_derivatives(self, x):
        C = self.c1 * x + self.c2
        S = self.s1 * x + self.s2
        K = np.cbrt(C)**2 * np.cbrt(S)**4
        L = (2.0 / 3.0) * self.c1 / C + (4.0 / 3.0) * self.s1 / S
        dL = -(2.0 / 3.0) * self.c1**2 / C**2 - (4.0 / 3.0) * self.s1**2 / S**2
        return (K, K * L, K * (L**2 + dL))

    def _antiderivative(self, x):
        return self.d * np.cbrt((self.c1 * x + self.c2) / (self.s1 * x + self.s2))

    def _antiderivative_inverse(self, y):
        rho = (np.asarray(y, dtype=float) / self.d)**3
        den = rho * self.s1 - self.c1
        if np.any(den == 0):
            raise DomainError(f"travel time {y} is an asymptotic value of {self!r}")
        return (self.c2 - rho * self.s2) / den

    def riccati_params(self):
        """ With A = s1 x + s2 and A1 = -a A the travel time solves
        a' = d^2/A1^2. A base point shifts a by a constant, which is
        absorbed into m and m1.
        """
        shift = 0.0 if self.base is None else float(self._antiderivative(self.base))
        return RiccatiParams(r=self.d**2, m=-shift * self.s1, m1=-shift * self.s2,
                             c1=self.s1, c2=self.s2)

    def riccati_jet(self, x, order=2):
        return self.travel_time_jet(x, order)

    def _descriptor(self):
        return {"s1": self.s1, "s2": self.s2, "c1": self.c1, "c2": self.c2}
