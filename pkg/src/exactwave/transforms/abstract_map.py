from abc import ABC, abstractmethod
import numpy as np


class AbstractConformalMap(ABC):

    kind = None

    @abstractmethod
    def forward(self, x, y):
        """ (x, y) -> (x1, y1) = (f(x, y), g(x, y)) """
        return None

    @abstractmethod
    def jacobian(self, x, y):
        """ Function returning the first partials (f_x, f_y, g_x, g_y) """
        return None

    @abstractmethod
    def hessian(self, x, y):
        """ Function returning (f_xx, f_xy, f_yy, g_xx, g_xy, g_yy) """
        return None

    @abstractmethod
    def inverse(self, x1, y1):
        """ (x1, y1) -> (x, y) on the region where the map is invertible """
        return None

    def check_region(self, x1, y1, margin=0.0):
        """ Raise DomainError if a point of the image region (or its
        margin neighbourhood) is outside the invertible region
        """
        return None

    def scale_factor(self, x, y):
        """ f_x^2 + f_y^2, the factor relating the two Laplacians """
        fx, fy, _, _ = self.jacobian(x, y)
        return fx**2 + fy**2

    def cr_check(self, x, y):
        """ Function to test the Cauchy-Riemann equations
        f_x = s g_y, f_y = -s g_x

        Returns
        -------
        tuple
            (s, residual) with s = +1 for a holomorphic and -1 for an
            antiholomorphic map, residual the largest violation of the
            better branch over the points
        """
        fx, fy, gx, gy = self.jacobian(np.asarray(x, dtype=float), np.asarray(y, dtype=float))
        holomorphic = np.max(np.abs(fx - gy) + np.abs(fy + gx))
        antiholomorphic = np.max(np.abs(fx + gy) + np.abs(fy - gx))
        if holomorphic <= antiholomorphic:
            return 1, float(holomorphic)
        return -1, float(antiholomorphic)

    def conformal_identity_residual(self, x, y):
        """ max of |f_x^2 + f_y^2 - g_x^2 - g_y^2| and |f_x g_x + f_y g_y| """
        fx, fy, gx, gy = self.jacobian(x, y)
        return float(max(np.max(np.abs(fx**2 + fy**2 - gx**2 - gy**2)),
                         np.max(np.abs(fx * gx + fy * gy))))

    def harmonic_residual(self, x, y):
        fxx, _, fyy, gxx, _, gyy = self.hessian(x, y)
        return float(max(np.max(np.abs(fxx + fyy)), np.max(np.abs(gxx + gyy))))

    def to_dict(self):
        return {"kind": self.kind}

    def __repr__(self):
        return f"{self.kind}()"
