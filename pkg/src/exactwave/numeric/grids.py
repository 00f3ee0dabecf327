import numpy as np

from exactwave.base.errors import ContractError, DomainError

MIN_NODES = 8
DEFAULT_MARGIN = 0.05


class Grid1D:

    def __init__(self, lo, hi, n, avoid=(), margin=DEFAULT_MARGIN):
        """ Uniform grid of n nodes on [lo, hi]

        Parameters
        ----------
        lo, hi : float
            Ends of the grid, lo < hi

        n : int
            Number of nodes, at least 8

        avoid : list of float, optional
            Points (singular points of a profile) the grid must keep
            away from

        margin : float, optional, default is 0.05
            Smallest allowed distance to the avoided points, as a
            fraction of the grid width


        Attributes
        ----------
        nodes : numpy array

        h : float
            The spacing
        """
        if n < MIN_NODES:
            raise ContractError(f"a grid needs at least {MIN_NODES} nodes, got {n}")
        if not lo < hi:
            raise ContractError(f"empty grid range [{lo}, {hi}]")
        self.lo = float(lo)
        self.hi = float(hi)
        self.n = int(n)
        self.nodes = np.linspace(self.lo, self.hi, self.n)
        self.h = (self.hi - self.lo) / (self.n - 1)
        gap = margin * (self.hi - self.lo)
        for p in avoid:
            if self.lo - gap < p < self.hi + gap:
                raise DomainError(f"grid [{self.lo}, {self.hi}] comes within {gap:g} "
                                  f"of the singular point {p}")

    @classmethod
    def avoiding(cls, profile, lo, hi, n, margin=DEFAULT_MARGIN):
        """ A grid checked against the domain and singular points of a profile """
        if not (profile.is_interior(lo) and profile.is_interior(hi)):
            raise DomainError(f"grid [{lo}, {hi}] leaves the domain {profile.domain} "
                              f"of {profile!r}")
        return cls(lo, hi, n, avoid=profile.singular_points, margin=margin)

    def refined(self, levels=1):
        """ The grid with the spacing halved `levels` times """
        return Grid1D(self.lo, self.hi, (self.n - 1) * 2**levels + 1)

    def to_dict(self):
        return {"lo": self.lo, "hi": self.hi, "n": self.n, "h": self.h}


class Grid2D:

    def __init__(self, first, second):
        """ Tensor product of two Grid1D, e.g. (t, x) """
        self.axes = (first, second)

    @property
    def shape(self):
        return tuple(axis.n for axis in self.axes)

    @property
    def spacing(self):
        return tuple(axis.h for axis in self.axes)

    def mesh(self):
        return np.meshgrid(self.axes[0].nodes, self.axes[1].nodes, indexing="ij")

    def to_dict(self):
        return {"axes": [axis.to_dict() for axis in self.axes]}


def uniform_spacing(nodes, rtol=1e-9):
    """ The spacing of a uniform node array

    Raises
    ------
    ContractError
        If the nodes are not equally spaced
    """
    nodes = np.asarray(nodes, dtype=float)
    if nodes.size < 2:
        raise ContractError("need at least two nodes to define a spacing")
    steps = np.diff(nodes)
    h = (nodes[-1] - nodes[0]) / (nodes.size - 1)
    if h <= 0 or not np.allclose(steps, h, rtol=rtol, atol=0.0):
        raise ContractError("finite differences need a uniform grid")
    return float(h)
