import logging
from dataclasses import dataclass, field, asdict
import numpy as np

from exactwave import __version__
from exactwave.base.errors import ConfigError
from exactwave.media import profile_from_dict
from exactwave.numeric import (Grid1D, Grid2D, convergence_study, fd_residual, fd_residual_study,
                               leapfrog_solve, orders_from_errors)
from exactwave.riccati import ClosedFormFamily, RiccatiParams, integrate_family
from exactwave.solutions import RankSolutionSpec, build_solution, residual_1d, residual_norms
from exactwave.transforms import PlaneWave, conformal_pullback, kelvin_3d, map_from_dict
from exactwave.waveforms import waveform_from_dict

logger = logging.getLogger(__name__)


@dataclass
class CommandResult:
    """ Everything a command writes: one table and its run summary """
    name: str
    header: list
    columns: list
    summary: dict = field(default_factory=dict)
    passed: bool = True


def _summary(command, config, **entries):
    out = {"command": command, "version": __version__, "config": config.to_dict(),
           "tolerances": asdict(config.tolerances)}
    out.update(entries)
    return out


def build_exact(config):
    """ The profile and the exact solution described by a scene """
    config.require("profile", "waveforms")
    profile = profile_from_dict(config.profile)
    T = waveform_from_dict(config.waveforms["T"])
    X = waveform_from_dict(config.waveforms["X"])
    params = None
    if config.solution.params is not None:
        params = RiccatiParams(**config.solution.params)
    spec = RankSolutionSpec(config.solution.rank, profile, T, X, params=params,
                            sample_interval=config.solution.sample_interval)
    solution = build_solution(spec)
    return solution.profile, solution


def _x_grid(config, profile, n=None):
    axis = config.grid.x
    return Grid1D.avoiding(profile, axis.lo, axis.hi, axis.n if n is None else n,
                           margin=config.grid.margin)


def _t_grid(config):
    axis = config.grid.t
    return Grid1D(axis.lo, axis.hi, axis.n)


def cmd_invariant(config, options):
    """ Table of (x, K, h) over grid.x """
    config.require("profile", "grid.x")
    profile = profile_from_dict(config.profile)
    x = _x_grid(config, profile).nodes
    h = profile.laplace_invariant(x)
    summary = _summary("invariant", config, profile=profile.to_dict(),
                       max_abs_invariant=float(np.max(np.abs(h))))
    return CommandResult("invariant", ["x", "K", "h"], [x, profile(x), h], summary)


def _solution_table(config):
    config.require("grid.t", "grid.x")
    profile, solution = build_exact(config)
    grid = Grid2D(_t_grid(config), _x_grid(config, profile))
    report = residual_norms(solution, profile, *(axis.nodes for axis in grid.axes))
    t, x = grid.mesh()
    columns = [t, x, solution(t, x), report.per_point]
    return profile, solution, report, columns


def cmd_solution(config, options):
    """ Table of (t, x, u, residual) with analytic residual norms """
    profile, solution, report, columns = _solution_table(config)
    passed = report.normalized_linf < config.tolerances.residual
    summary = _summary("solution", config, solution=solution.describe(),
                       profile=profile.to_dict(), residual=report.to_dict(), passed=passed)
    return CommandResult("solution", ["t", "x", "u", "residual"], columns, summary, passed)


def _fd_check(config, profile, solution, levels=3):
    t_grid = _t_grid(config)
    x_grid = _x_grid(config, profile)
    rows = []
    for k in range(levels):
        tk, xk = t_grid.refined(k), x_grid.refined(k)
        t, x = np.meshgrid(tk.nodes, xk.nodes, indexing="ij")
        K = profile(xk.nodes)
        report = fd_residual(solution(t, x), [tk.nodes, xk.nodes], (K**2)[np.newaxis, :])
        rows.append({"h_t": tk.h, "h_x": xk.h, "linf": report.linf,
                     "normalized_linf": report.normalized_linf})
    orders = orders_from_errors([row["linf"] for row in rows])
    return {"levels": rows, "observed_orders": orders}


def _sweep(config, profile, solution, scale, seed):
    """ Residuals of randomly time-shifted solutions at random nodes """
    rng = np.random.default_rng(seed)
    count = config.sweep_count
    t_axis, x_axis = config.grid.t, config.grid.x
    t = rng.uniform(t_axis.lo, t_axis.hi, count)
    x = rng.uniform(x_axis.lo, x_axis.hi, count)
    shifts = rng.uniform(-0.5, 0.5, count)
    residuals = np.array([residual_1d(solution.time_shifted(tau), profile, ti, xi)
                          for tau, ti, xi in zip(shifts, t, x)], dtype=float)
    worst = float(np.max(np.abs(residuals)))
    return {"seed": seed, "count": count,
            "max_abs_residual": worst,
            "normalized": worst / scale if scale > 0 else worst}


def cmd_residual(config, options):
    """ cmd_solution plus a finite-difference check and a seeded sweep """
    profile, solution, report, columns = _solution_table(config)
    fd = _fd_check(config, profile, solution)
    seed = 0 if options.seed is None else options.seed
    sweep = _sweep(config, profile, solution, report.scale, seed)
    tol = config.tolerances
    passed = report.normalized_linf < tol.residual and sweep["normalized"] < tol.residual
    summary = _summary("residual", config, solution=solution.describe(),
                       profile=profile.to_dict(), residual=report.to_dict(),
                       finite_difference=fd, sweep=sweep, passed=passed)
    return CommandResult("residual", ["t", "x", "u", "residual"], columns, summary, passed)


def _seed_solution(descriptor):
    allowed = {"c", "angle", "direction", "waveform"}
    unknown = set(descriptor) - allowed
    if unknown:
        raise ConfigError(f"unknown keys {sorted(unknown)} in 'transform.seed'")
    if "waveform" not in descriptor:
        raise ConfigError("'transform.seed' needs a 'waveform'")
    try:
        return PlaneWave(waveform_from_dict(descriptor["waveform"]), c=descriptor.get("c", 1.0),
                         angle=descriptor.get("angle"), direction=descriptor.get("direction"))
    except TypeError as err:
        raise ConfigError(f"invalid 'transform.seed': {err}") from err


def cmd_transform(config, options):
    """ Pullback or Kelvin inversion of a plane wave, checked by a
    Richardson study of the finite-difference residual at each point
    """
    config.require("transform")
    tr = config.transform
    seed = _seed_solution(tr.seed)
    points = np.asarray(tr.points, dtype=float)
    reach = tr.h * (2 if tr.stencil_order == 4 else 1)
    if tr.kind == "kelvin_3d":
        if seed.dim != 3:
            raise ConfigError("kelvin_3d needs a 3-d seed direction")
        v = kelvin_3d(seed)
        coefficient = v.coefficient
        header = ["t", "x1", "y1", "z1"]
    else:
        if seed.dim != 2:
            raise ConfigError(f"{tr.kind} needs a 2-d seed")
        conformal_map = map_from_dict({"kind": tr.kind})
        conformal_map.check_region(points[:, 0], points[:, 1], margin=reach)
        v, coefficient = conformal_pullback(conformal_map, seed)
        header = ["t", "x1", "y1"]

    t = np.full(len(points), tr.t)
    stencil_points = np.column_stack([t, points])
    study = fd_residual_study(v, coefficient, stencil_points, tr.h, levels=tr.levels,
                              order=tr.stencil_order)
    r = study.per_point
    with np.errstate(divide="ignore", invalid="ignore"):
        point_orders = np.log2(np.abs(r[:, 0]) / np.abs(r[:, 1]))
    values = v(*stencil_points.T)
    c1sq = coefficient(*points.T)
    passed = min(study.observed_orders) >= config.tolerances.transform_order
    summary = _summary("transform", config, solution=v.describe(), residual=study.to_dict(),
                       passed=passed)
    columns = [t] + [points[:, k] for k in range(points.shape[1])] + [values, c1sq, r[:, 0],
                                                                       r[:, 1], point_orders]
    return CommandResult("transform", header + ["v", "c1sq", "residual_h", "residual_h2",
                                                "observed_order"], columns, summary, passed)


def cmd_riccati(config, options):
    """ Adaptive integration of a Riccati family against its closed form """
    config.require("riccati")
    rc = config.riccati
    family = ClosedFormFamily(rc.family, rc.b)
    path = integrate_family(family, rc.y0, rc.y_end, n_samples=rc.samples)
    x_closed = family.x(path.y)
    deviation = np.abs(path.x - x_closed) / np.maximum(1.0, np.abs(x_closed))
    worst = float(np.max(deviation))
    passed = worst < config.tolerances.riccati
    summary = _summary("riccati", config, family=family.to_dict(),
                       params=family.params.to_dict(), pole=path.pole,
                       y_end=float(path.y[-1]), max_deviation=worst, passed=passed)
    return CommandResult("riccati", ["y", "x_numeric", "x_closed", "deviation"],
                         [path.y, path.x, x_closed, deviation], summary, passed)


def cmd_bench(config, options):
    """ Leapfrog convergence study against the exact solution """
    config.require("grid.x")
    profile, solution = build_exact(config)
    bench = config.bench

    def runner(n):
        result = leapfrog_solve(profile, solution, _x_grid(config, profile, n),
                                t_end=bench.t_end, cfl=bench.cfl)
        return result.h, result.l2_error, result.linf_error

    report = convergence_study(runner, bench.n0, options.levels)
    tol = config.tolerances
    passed = all(tol.order_min <= order <= tol.order_max for order in report.observed_orders)
    summary = _summary("bench", config, solution=solution.describe(), profile=profile.to_dict(),
                       convergence=report.to_dict(), passed=passed)
    rows = report.levels
    columns = [[row["h"] for row in rows], [row["l2"] for row in rows],
               [row["linf"] for row in rows], [np.nan] + report.observed_orders]
    return CommandResult("bench", ["h", "L2_error", "Linf_error", "observed_order"],
                         columns, summary, passed)


COMMANDS = {
    "invariant": cmd_invariant,
    "solution": cmd_solution,
    "residual": cmd_residual,
    "transform": cmd_transform,
    "riccati": cmd_riccati,
    "bench": cmd_bench,
}
