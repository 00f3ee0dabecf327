from dataclasses import dataclass, field
import numpy as np


@dataclass
class ResidualReport:
    """ Residual or error norms of one check, optionally over a
    sequence of refinement levels.

    Attributes
    ----------
    linf, l2 : float
        Norms of the residual on the finest (or only) level

    scale : float
        Normalization, max |u_tt| over the grid

    grid : dict
        Grid metadata (ranges, node counts, spacings)

    levels : list of dict
        One entry per refinement level with its h and norms

    observed_orders : list of float
        log2 of the error ratio of consecutive levels; empty with
        fewer than two levels

    per_point : numpy array, optional
        Residual at every node (or every point and level)

    monotone : bool
        False if the error did not decrease between some levels
    """
    linf: float
    l2: float
    scale: float = 0.0
    grid: dict = field(default_factory=dict)
    levels: list = field(default_factory=list)
    observed_orders: list = field(default_factory=list)
    per_point: np.ndarray = field(default=None, repr=False)
    monotone: bool = True

    @property
    def normalized_linf(self):
        return self.linf / self.scale if self.scale > 0 else self.linf

    @property
    def normalized_l2(self):
        return self.l2 / self.scale if self.scale > 0 else self.l2

    def to_dict(self):
        return {"linf": self.linf, "l2": self.l2, "scale": self.scale,
                "normalized_linf": self.normalized_linf,
                "normalized_l2": self.normalized_l2,
                "grid": self.grid, "levels": self.levels,
                "observed_orders": self.observed_orders, "monotone": self.monotone}


def norms(values):
    """ (L-infinity, root-mean-square) of an array """
    values = np.abs(np.asarray(values, dtype=float))
    return float(np.max(values)), float(np.sqrt(np.mean(values**2)))
