from abc import ABC, abstractmethod
import numpy as np

from exactwave.base.errors import ContractError, DomainError


class ExactSolutionND(ABC):

    dim = None
    label = "solution"

    @abstractmethod
    def __call__(self, t, *coords):
        """ Value of the solution at time t and the given coordinates """
        return None

    @abstractmethod
    def coefficient(self, *coords):
        """ c^2 of the equation u_tt = c^2 Laplacian(u) it solves """
        return None

    def describe(self):
        return {"label": self.label, "dim": self.dim}


class PlaneWave(ExactSolutionND):

    def __init__(self, waveform, c=1.0, angle=None, direction=None):
        """ Class representing u = F(t - n.x / c), a solution of
        u_tt = c^2 Laplacian(u) in 2 or 3 dimensions.

        Parameters
        ----------
        waveform : AbstractWaveform
            The profile F

        c : float, optional, default is 1
            Positive wave speed

        angle : float, optional
            Direction angle in the plane, gives a 2-d wave

        direction : list of float, optional
            Unit vector with 2 or 3 components
        """
        if c <= 0:
            raise ContractError("plane wave speed must be positive")
        if (angle is None) == (direction is None):
            raise TypeError("Need exactly one of angle or direction.")
        if angle is not None:
            direction = (np.cos(angle), np.sin(angle))
        direction = np.asarray(direction, dtype=float)
        if direction.shape not in ((2,), (3,)):
            raise ContractError("plane wave direction needs 2 or 3 components")
        if not np.isclose(np.linalg.norm(direction), 1.0, rtol=0.0, atol=1e-12):
            raise ContractError(f"plane wave direction {direction} is not a unit vector")
        self.waveform = waveform
        self.c = float(c)
        self.direction = direction
        self.dim = direction.size
        self.label = f"plane_wave(c={self.c:g}, n={direction.tolist()})"

    def __call__(self, t, *coords):
        if len(coords) != self.dim:
            raise ContractError(f"{self.dim}-d plane wave evaluated with {len(coords)} coordinates")
        phase = sum(n * np.asarray(xi, dtype=float) for n, xi in zip(self.direction, coords))
        return self.waveform(np.asarray(t, dtype=float) - phase / self.c)

    def coefficient(self, *coords):
        return self.c**2 + 0.0 * np.asarray(coords[0], dtype=float)

    def describe(self):
        return {"label": self.label, "dim": self.dim, "c": self.c,
                "direction": self.direction.tolist(), "waveform": self.waveform.to_dict()}


def plane_wave(c, direction, waveform):
    """ direction is an angle (2-d) or a unit vector (2-d or 3-d) """
    if np.ndim(direction) == 0:
        return PlaneWave(waveform, c=c, angle=float(direction))
    return PlaneWave(waveform, c=c, direction=direction)


class PulledBackSolution(ExactSolutionND):

    dim = 2

    def __init__(self, conformal_map, seed):
        """ v(t, x1, y1) = u(t, x, y) with (x, y) = map.inverse(x1, y1),
        which solves v_tt = c1^2 Laplacian(v) with
        c1^2(x1, y1) = c^2(x, y) (f_x^2 + f_y^2)(x, y)
        """
        if seed.dim != 2:
            raise ContractError("conformal pullbacks need a 2-d seed solution")
        self.map = conformal_map
        self.seed = seed
        self.label = f"pullback({conformal_map!r}, {seed.label})"

    def __call__(self, t, x1, y1):
        x, y = self.map.inverse(x1, y1)
        return self.seed(t, x, y)

    def coefficient(self, x1, y1):
        x, y = self.map.inverse(x1, y1)
        return self.seed.coefficient(x, y) * self.map.scale_factor(x, y)

    def describe(self):
        return {"label": self.label, "map": self.map.to_dict(), "seed": self.seed.describe()}


def conformal_pullback(conformal_map, seed):
    """ Function returning (v, c1^2) for a 2-d seed solution

    Returns
    -------
    tuple
        The pulled back solution and its coefficient field, a callable
        of (x1, y1)
    """
    v = PulledBackSolution(conformal_map, seed)
    return v, v.coefficient


class KelvinSolution(ExactSolutionND):

    dim = 3

    def __init__(self, seed):
        """ Kelvin inversion of a 3-d solution of u_tt = c^2 Laplacian(u):

            v(t, X1) = u(t, X1/|X1|^2) / |X1|

        solves v_tt = c^2 |X1|^4 Laplacian(v). Applying it twice returns u.
        """
        if seed.dim != 3:
            raise ContractError("the Kelvin inversion needs a 3-d seed solution")
        self.seed = seed
        self.label = f"kelvin({seed.label})"

    @staticmethod
    def _invert(x1, y1, z1):
        x1, y1, z1 = (np.asarray(c, dtype=float) for c in (x1, y1, z1))
        r2 = x1**2 + y1**2 + z1**2
        if np.any(r2 == 0):
            raise DomainError("the Kelvin inversion is not defined at the origin")
        return x1 / r2, y1 / r2, z1 / r2, np.sqrt(r2)

    def __call__(self, t, x1, y1, z1):
        x, y, z, r1 = self._invert(x1, y1, z1)
        return self.seed(t, x, y, z) / r1

    def coefficient(self, x1, y1, z1):
        x, y, z, r1 = self._invert(x1, y1, z1)
        return self.seed.coefficient(x, y, z) * r1**4


def kelvin_3d(seed):
    return KelvinSolution(seed)
