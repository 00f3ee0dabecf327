import logging
import numpy as np

from exactwave.base.errors import ContractError, DomainError
from exactwave.transforms.abstract_map import AbstractConformalMap

logger = logging.getLogger(__name__)

CR_TOLERANCE = 1e-8


class ComplexMap(AbstractConformalMap):

    def __init__(self, conjugate=False):
        """ A map given by a holomorphic function F(z), z = x + iy,
        or by its complex conjugate when `conjugate` is set. Partial
        derivatives follow from F' and F''.
        """
        self.conjugate = conjugate

    def F(self, z):
        raise NotImplementedError

    def dF(self, z):
        raise NotImplementedError

    def d2F(self, z):
        raise NotImplementedError

    def _sign(self):
        return -1.0 if self.conjugate else 1.0

    def forward(self, x, y):
        w = self.F(np.asarray(x) + 1j * np.asarray(y))
        return w.real, self._sign() * w.imag

    def jacobian(self, x, y):
        d = self.dF(np.asarray(x) + 1j * np.asarray(y))
        s = self._sign()
        return d.real, -d.imag, s * d.imag, s * d.real

    def hessian(self, x, y):
        d = self.d2F(np.asarray(x) + 1j * np.asarray(y))
        s = self._sign()
        return d.real, -d.imag, -d.real, s * d.imag, s * d.real, -s * d.imag


class InversionMap(ComplexMap):

    kind = "inversion_2d"

    def __init__(self):
        """ Inversion in the unit circle (x, y) -> (x, y)/(x^2 + y^2),
        i.e. z -> 1/conj(z). Antiholomorphic and its own inverse; the
        unit circle is fixed pointwise
        """
        super().__init__(conjugate=True)

    def F(self, z):
        return 1.0 / z

    def dF(self, z):
        return -1.0 / z**2

    def d2F(self, z):
        return 2.0 / z**3

    def check_region(self, x1, y1, margin=0.0):
        r = np.hypot(x1, y1)
        if np.any(r <= margin):
            raise DomainError("inversion is not defined at the origin")

    def inverse(self, x1, y1):
        self.check_region(x1, y1)
        return self.forward(x1, y1)


class ExponentialMap(ComplexMap):

    kind = "exp_2d"

    def __init__(self):
        """ (x, y) -> e^x (cos y, sin y). The inverse uses the principal
        angle in (-pi, pi]; regions touching the negative real axis or
        the origin are rejected
        """
        super().__init__(conjugate=False)

    def F(self, z):
        return np.exp(z)

    def dF(self, z):
        return np.exp(z)

    def d2F(self, z):
        return np.exp(z)

    def check_region(self, x1, y1, margin=0.0):
        x1 = np.asarray(x1, dtype=float)
        y1 = np.asarray(y1, dtype=float)
        if np.any(np.hypot(x1, y1) <= margin):
            raise DomainError("the exponential map does not reach the origin")
        if np.any((x1 < margin) & (np.abs(y1) <= margin)):
            raise DomainError("region crosses the branch cut of the logarithm "
                              "along the negative real axis")

    def inverse(self, x1, y1):
        self.check_region(x1, y1)
        x1 = np.asarray(x1, dtype=float)
        y1 = np.asarray(y1, dtype=float)
        return 0.5 * np.log(x1**2 + y1**2), np.arctan2(y1, x1)


class CustomConformalMap(AbstractConformalMap):

    kind = "custom"

    def __init__(self, forward, jacobian, inverse, hessian=None, sample_points=None,
                 name="custom"):
        """ Conformal map given by its coordinate functions.

        Construction checks the Cauchy-Riemann equations on a sample
        cloud and rejects maps violating them beyond 1e-8.

        Parameters
        ----------
        forward : callable
            (x, y) -> (f, g)

        jacobian : callable
            (x, y) -> (f_x, f_y, g_x, g_y)

        inverse : callable
            (x1, y1) -> (x, y)

        hessian : callable, optional
            (x, y) -> (f_xx, f_xy, f_yy, g_xx, g_xy, g_yy)

        sample_points : numpy array, optional
            Shape (n, 2), the cloud used for the check; defaults to a
            grid on [0.5, 1.5]^2

        name : str, optional
        """
        self._forward = forward
        self._jacobian = jacobian
        self._inverse = inverse
        self._hessian = hessian
        self.name = name
        if sample_points is None:
            gx, gy = np.meshgrid(np.linspace(0.5, 1.5, 11), np.linspace(0.5, 1.5, 11))
            sample_points = np.column_stack([gx.ravel(), gy.ravel()])
        sample_points = np.asarray(sample_points, dtype=float)
        self.branch, residual = self.cr_check(sample_points[:, 0], sample_points[:, 1])
        if residual > CR_TOLERANCE:
            raise ContractError(f"map {name!r} violates the Cauchy-Riemann equations "
                                f"by {residual:.3e}")
        logger.debug("custom map %s: branch %+d, CR residual %.2e", name, self.branch, residual)

    def forward(self, x, y):
        return self._forward(x, y)

    def jacobian(self, x, y):
        return self._jacobian(x, y)

    def hessian(self, x, y):
        if self._hessian is None:
            raise ContractError(f"map {self.name!r} was built without second derivatives")
        return self._hessian(x, y)

    def inverse(self, x1, y1):
        return self._inverse(x1, y1)

    def __repr__(self):
        return f"custom({self.name})"


MAP_KINDS = {"inversion_2d": InversionMap, "exp_2d": ExponentialMap}
