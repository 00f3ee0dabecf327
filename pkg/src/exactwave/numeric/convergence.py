import logging
import numpy as np

from exactwave.base.errors import ContractError
from exactwave.numeric.report import ResidualReport

logger = logging.getLogger(__name__)


def orders_from_errors(errors):
    """ Observed orders log2(e_k / e_{k+1}) of errors measured on
    spacings halved from one level to the next
    """
    errors = np.asarray(errors, dtype=float)
    if errors.size < 2:
        raise ContractError("observed orders need errors on at least 2 levels")
    with np.errstate(divide="ignore", invalid="ignore"):
        return [float(v) for v in np.log2(errors[:-1] / errors[1:])]


def level_nodes(n0, level):
    """ Node count of a level: spacing halved `level` times from n0 nodes """
    return (n0 - 1) * 2**level + 1


def convergence_study(runner, n0, levels=3):
    """ Function to run a solver on successively halved spacings

    Parameters
    ----------
    runner : callable
        runner(n) -> (h, l2_error, linf_error) for a grid of n nodes

    n0 : int
        Node count of the coarsest level

    levels : int, optional, default is 3
        Number of levels, at least 3

    Returns
    -------
    ResidualReport
        Errors of the finest level, the table of all levels and the
        observed orders from the L2 errors. An error sequence that is
        not decreasing is logged and flagged, not raised
    """
    if levels < 3:
        raise ContractError(f"a convergence study needs at least 3 levels, got {levels}")
    table = []
    for level in range(levels):
        n = level_nodes(n0, level)
        h, l2, linf = runner(n)
        table.append({"n": n, "h": float(h), "l2": float(l2), "linf": float(linf)})
        logger.info("level %d: n=%d h=%.6g L2=%.6e Linf=%.6e", level, n, h, l2, linf)
    l2_errors = [row["l2"] for row in table]
    orders = orders_from_errors(l2_errors)
    monotone = all(a > b for a, b in zip(l2_errors, l2_errors[1:]))
    if not monotone:
        logger.warning("error sequence %s is not decreasing", l2_errors)
    return ResidualReport(linf=table[-1]["linf"], l2=table[-1]["l2"], levels=table,
                          observed_orders=orders, monotone=monotone,
                          grid={"n0": n0, "levels": levels})
