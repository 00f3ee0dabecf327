import logging
from dataclasses import dataclass
import numpy as np

from exactwave.base.errors import BlowUpError, ContractError
from exactwave.numeric.grids import Grid1D, uniform_spacing

logger = logging.getLogger(__name__)


@dataclass
class LeapfrogResult:
    """ Final time level of a leapfrog run and its error against the
    exact solution
    """
    x: np.ndarray
    u: np.ndarray
    exact: np.ndarray
    t_end: float
    dt: float
    steps: int
    h: float
    l2_error: float
    linf_error: float


def crossing_time(profile, lo, hi):
    return float(abs(profile.travel_time(hi) - profile.travel_time(lo)))


def leapfrog_solve(profile, exact, x_grid, t0=0.0, t_end=None, cfl=0.9):
    """ Function to solve u_tt = K(x)^2 u_xx with the three-level scheme

        u+ = 2u - u- + (dt K_i / h)^2 (u_{i+1} - 2u_i + u_{i-1})

    Both starting levels and the Dirichlet boundary values are taken
    from the exact solution.

    Parameters
    ----------
    profile : AbstractProfile

    exact : ExactSolution1D
        Supplies initial and boundary data and the reference field

    x_grid : Grid1D or numpy array
        Uniform spatial nodes

    t0 : float, optional, default is 0

    t_end : float, optional
        Final time, defaults to t0 plus half the crossing time of the grid

    cfl : float, optional, default is 0.9
        dt is at most cfl * h / max K, cfl in (0, 1]

    Returns
    -------
    LeapfrogResult

    Raises
    ------
    ContractError
        If cfl is outside (0, 1]
    BlowUpError
        If a non-finite value appears, with the step index
    """
    if not 0 < cfl <= 1:
        raise ContractError(f"CFL number must lie in (0, 1], got {cfl}")
    x = x_grid.nodes if isinstance(x_grid, Grid1D) else np.asarray(x_grid, dtype=float)
    h = uniform_spacing(x)
    K = profile(x)
    if t_end is None:
        t_end = t0 + 0.5 * crossing_time(profile, x[0], x[-1])
    if not t_end > t0:
        raise ContractError(f"final time {t_end} must follow the start time {t0}")

    dt_max = cfl * h / float(np.max(K))
    steps = max(int(np.ceil((t_end - t0) / dt_max)), 1)
    dt = (t_end - t0) / steps
    nu2 = (dt * K[1:-1] / h)**2
    logger.debug("leapfrog on %r: %d nodes, h=%.3e, dt=%.3e, %d steps", profile, len(x),
                 h, dt, steps)

    u_prev = exact(t0, x)
    if steps == 1:
        u = exact(t_end, x)
    else:
        u = exact(t0 + dt, x)
    for step in range(2, steps + 1):
        t = t0 + step * dt
        u_next = np.empty_like(u)
        u_next[1:-1] = 2.0 * u[1:-1] - u_prev[1:-1] + nu2 * (u[2:] - 2.0 * u[1:-1] + u[:-2])
        u_next[0] = exact(t, x[0])
        u_next[-1] = exact(t, x[-1])
        if not np.all(np.isfinite(u_next)):
            raise BlowUpError(f"non-finite value in the leapfrog field at step {step}",
                              last_valid=t - dt, step=step)
        u_prev, u = u, u_next

    reference = exact(t_end, x)
    error = u - reference
    return LeapfrogResult(x=x, u=u, exact=reference, t_end=float(t_end), dt=float(dt),
                          steps=steps, h=h, l2_error=float(np.sqrt(h * np.sum(error**2))),
                          linf_error=float(np.max(np.abs(error))))
