import logging
import numpy as np

from exactwave.base.errors import ContractError
from exactwave.numeric.convergence import orders_from_errors
from exactwave.numeric.grids import uniform_spacing
from exactwave.numeric.report import ResidualReport, norms

logger = logging.getLogger(__name__)

# central second-derivative weights at offsets -w..w, divided by h^2
SECOND_DERIVATIVE = {
    2: np.array([1.0, -2.0, 1.0]),
    4: np.array([-1.0, 16.0, -30.0, 16.0, -1.0]) / 12.0,
}


def _weights(order):
    if order not in SECOND_DERIVATIVE:
        raise ContractError(f"stencil order must be 2 or 4, got {order}")
    return SECOND_DERIVATIVE[order]


def second_difference(values, axis, h, order=2):
    """ Central second difference along one axis, on the nodes at
    least half a stencil away from every boundary of that axis
    """
    weights = _weights(order)
    w = len(weights) // 2
    n = values.shape[axis]
    out = 0.0
    for k, c in enumerate(weights):
        index = [slice(None)] * values.ndim
        index[axis] = slice(k, n - 2 * w + k)
        out = out + c * values[tuple(index)]
    return out / h**2


def _interior(values, w):
    return values[tuple(slice(w, s - w) for s in values.shape)]


def fd_residual(values, axes, coefficient, order=2):
    """ Function to evaluate the discrete residual of

        u_tt - c^2 (u_x1x1 + ... + u_xdxd)

    on a uniform tensor grid

    Parameters
    ----------
    values : numpy array
        Field sampled on the grid, axis 0 being time

    axes : list of numpy array
        Node coordinates per axis, time first

    coefficient : float or numpy array
        c^2, broadcastable to values

    order : int, optional, default is 2
        Formal order of the central stencil, 2 or 4

    Returns
    -------
    ResidualReport
        Norms over the interior nodes, normalized by max |u_tt|

    Raises
    ------
    ContractError
        For non-uniform axes, shape mismatch or non-finite values
    """
    values = np.asarray(values, dtype=float)
    if values.ndim != len(axes):
        raise ContractError(f"{values.ndim}-d field given with {len(axes)} axes")
    if not np.all(np.isfinite(values)):
        raise ContractError("field values must be finite")
    spacing = [uniform_spacing(nodes) for nodes in axes]
    for nodes, size in zip(axes, values.shape):
        if len(nodes) != size:
            raise ContractError("axis lengths do not match the field shape")
    w = len(_weights(order)) // 2
    if min(values.shape) <= 2 * w:
        raise ContractError(f"grid too small for a stencil of order {order}")

    def along(axis):
        d = second_difference(values, axis, spacing[axis], order)
        index = [slice(w, -w)] * values.ndim
        index[axis] = slice(None)
        return d[tuple(index)]

    u_tt = along(0)
    laplacian = sum(along(axis) for axis in range(1, values.ndim))
    c2 = np.broadcast_to(np.asarray(coefficient, dtype=float), values.shape)
    residual = u_tt - _interior(c2, w) * laplacian
    linf, l2 = norms(residual)
    scale = float(np.max(np.abs(u_tt)))
    return ResidualReport(linf=linf, l2=l2, scale=scale, per_point=residual,
                          grid={"shape": list(values.shape), "h": spacing, "order": order})


def point_residual(func, coefficient, points, h, order=2):
    """ Residual of v_tt - c^2 Laplacian(v) at scattered points, each
    evaluated with its own central stencil of spacing h

    Parameters
    ----------
    func : callable
        func(t, *coords) -> values, vectorized

    coefficient : callable
        coefficient(*coords) -> c^2

    points : numpy array
        Shape (npoints, 1 + dim), time first

    h : float
        Stencil spacing, the same along every axis

    Returns
    -------
    numpy array
        The residual at every point
    """
    points = np.atleast_2d(np.asarray(points, dtype=float))
    weights = _weights(order)
    w = len(weights) // 2
    offsets = (np.arange(len(weights)) - w) * h
    second = []
    for axis in range(points.shape[1]):
        total = 0.0
        for c, shift in zip(weights, offsets):
            shifted = points.copy()
            shifted[:, axis] += shift
            total = total + c * func(*shifted.T)
        second.append(total / h**2)
    return second[0] - coefficient(*points[:, 1:].T) * sum(second[1:])


def fd_residual_study(func, coefficient, points, h, levels=3, order=2):
    """ Richardson study of point_residual on the spacings
    h, h/2, h/4, ...

    Returns
    -------
    ResidualReport
        linf/l2 of the finest level, per-level norms, observed orders
        from the L-infinity norms, and per_point of shape
        (npoints, levels)
    """
    if levels < 2:
        raise ContractError(f"a residual study needs at least 2 levels, got {levels}")
    table, per_level = [], []
    for k in range(levels):
        hk = h / 2**k
        residual = point_residual(func, coefficient, points, hk, order)
        if not np.all(np.isfinite(residual)):
            raise ContractError(f"non-finite residual at spacing {hk:g}")
        linf, l2 = norms(residual)
        table.append({"h": hk, "linf": linf, "l2": l2})
        per_level.append(residual)
        logger.debug("stencil order %d, h=%g: linf %.3e", order, hk, linf)
    orders = orders_from_errors([row["linf"] for row in table])
    monotone = all(a["linf"] > b["linf"] for a, b in zip(table, table[1:]))
    return ResidualReport(linf=table[-1]["linf"], l2=table[-1]["l2"], levels=table,
                          observed_orders=orders, per_point=np.stack(per_level, axis=1),
                          monotone=monotone, grid={"h": h, "order": order,
                                                   "points": int(len(np.atleast_2d(points)))})
