import logging
import numpy as np

from exactwave.base.errors import ContractError
from exactwave.numeric.report import ResidualReport, norms

logger = logging.getLogger(__name__)


def residual_1d(u, profile, t, x):
    """ u_tt - K(x)^2 u_xx evaluated with analytic jets """
    K = profile.jet(x, 0).value
    return u.u_tt(t, x) - K**2 * u.u_xx(t, x)


def residual_norms(u, profile, t_nodes, x_nodes):
    """ Function to sample residual_1d on the tensor grid t_nodes x x_nodes

    Parameters
    ----------
    u : ExactSolution1D

    profile : AbstractProfile

    t_nodes, x_nodes : numpy array
        Node coordinates, non-empty

    Returns
    -------
    ResidualReport
        Norms normalized by max |u_tt| on the grid, per_point of shape
        (len(t_nodes), len(x_nodes))
    """
    t_nodes = np.asarray(t_nodes, dtype=float)
    x_nodes = np.asarray(x_nodes, dtype=float)
    if t_nodes.size == 0 or x_nodes.size == 0:
        raise ContractError("residual grid is empty")
    t, x = np.meshgrid(t_nodes, x_nodes, indexing="ij")
    K = profile.jet(x, 0).value
    u_tt = u.u_tt(t, x)
    residual = u_tt - K**2 * u.u_xx(t, x)
    linf, l2 = norms(residual)
    scale = float(np.max(np.abs(u_tt)))
    grid = {"t": [float(t_nodes[0]), float(t_nodes[-1]), int(t_nodes.size)],
            "x": [float(x_nodes[0]), float(x_nodes[-1]), int(x_nodes.size)]}
    logger.debug("residual of %s on %r: linf %.3e, l2 %.3e, scale %.3e",
                 u.label, profile, linf, l2, scale)
    return ResidualReport(linf=linf, l2=l2, scale=scale, grid=grid, per_point=residual)
