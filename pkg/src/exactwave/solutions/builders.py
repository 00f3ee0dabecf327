import logging
from dataclasses import dataclass
import numpy as np

from exactwave.base.errors import ConstructionError, ContractError, DomainError
from exactwave.base.jets import Jet
from exactwave.media.analytic_profiles import QuadraticProfile
from exactwave.riccati import RiccatiParams
from exactwave.solutions.exact_solution import CharacteristicSolution

logger = logging.getLogger(__name__)

CONSISTENCY_RTOL = 1e-8
CONSISTENCY_SAMPLES = 100


@dataclass(frozen=True)
class RankSolutionSpec:
    """ Description of a rank-0 or rank-1 solution

    Attributes
    ----------
    rank : int
        0 or 1

    profile : AbstractProfile
        quadratic for rank 0; a profile with a rank-1 representation
        (gen_euler, riccati_implicit) for rank 1

    T, X : AbstractWaveform
        The arbitrary functions

    params : RiccatiParams, optional
        Rank-1 constants (r, m, m1, c1, c2); taken from the profile
        when omitted and checked against its travel time otherwise

    sample_interval : tuple of float, optional
        Where the rank-1 consistency check samples x, defaults to the
        reference interval of the profile
    """
    rank: int
    profile: object
    T: object
    X: object
    params: RiccatiParams = None
    sample_interval: tuple = None


def _linear_jet(slope, intercept):
    def jet(x, order):
        x = np.asarray(x, dtype=float)
        return Jet((slope * x + intercept, slope + 0.0 * x, 0.0 * x)[:order + 1])
    return jet


def build_rank0(m1, m2, T, X, base=None):
    """ Function to build u = (m1 x + m2) [T(t + a) + X(t - a)], the
    general solution of u_tt = (m1 x + m2)^4 u_xx.

    Parameters
    ----------
    m1, m2 : float
        Coefficients of the amplitude A = m1 x + m2

    T, X : AbstractWaveform

    base : float, optional
        Base point of the travel time; without it a = -1/(m1 A),
        or x/m2^2 when m1 = 0

    Returns
    -------
    CharacteristicSolution
        With the quadratic profile attached as ``profile``
    """
    profile = QuadraticProfile(m1, m2, base=base)
    solution = CharacteristicSolution(_linear_jet(profile.m1, profile.m2),
                                      profile.travel_time_jet, T, X,
                                      label=f"rank0(m1={m1:g}, m2={m2:g})")
    solution.profile = profile
    logger.debug("built %s with %r, %r", solution.label, T, X)
    return solution


def check_consistency(profile, params, interval=None, n=CONSISTENCY_SAMPLES):
    """ Largest relative deviation of a' A1^2 from r at n points of
    the interval, a being the profile's Riccati travel time
    """
    lo, hi = profile.reference_interval() if interval is None else interval
    xs = np.linspace(lo, hi, n)
    xs = xs[[profile.is_interior(x) for x in xs]]
    if len(xs) == 0:
        raise ConstructionError(f"no interior sample points in [{lo}, {hi}] for {profile!r}")
    a, da = profile.riccati_jet(xs, 1).coeffs
    lead = params.lead(xs, a)
    return float(np.max(np.abs(da * lead**2 - params.r)) / abs(params.r))


def build_rank1(spec):
    """ Function to build the rank-1 solution

        u = A [T(t + a) + X(t - a)] + A1 [T'(t + a) - X'(t - a)]

    with A = c1 x + c2, A1 = m x + m1 - a A and a' = r/A1^2.

    Parameters
    ----------
    spec : RankSolutionSpec

    Returns
    -------
    CharacteristicSolution
        With the profile attached as ``profile``

    Raises
    ------
    ConstructionError
        If the profile has no rank-1 representation or the constants
        and the travel time violate a' A1^2 = r
    """
    if spec.rank != 1:
        raise ContractError(f"build_rank1 needs rank 1, got {spec.rank}")
    profile = spec.profile
    try:
        params = spec.params if spec.params is not None else profile.riccati_params()
        deviation = check_consistency(profile, params, spec.sample_interval)
    except (ContractError, DomainError) as err:
        raise ConstructionError(f"cannot build a rank-1 solution on {profile!r}: {err}") from err
    if not deviation <= CONSISTENCY_RTOL:
        raise ConstructionError(f"a' A1^2 deviates from r={params.r} by {deviation:.3e} "
                                f"(relative) on {profile!r}")
    logger.debug("rank-1 constants %s consistent with %r to %.2e", params, profile, deviation)

    def lead(x, order):
        X = Jet.variable(np.asarray(x, dtype=float), order)
        a = profile.riccati_jet(x, order)
        return params.m * X + params.m1 - (params.c1 * X + params.c2) * a

    solution = CharacteristicSolution(_linear_jet(params.c1, params.c2), profile.riccati_jet,
                                      spec.T, spec.X, lead=lead,
                                      label=f"rank1({profile!r})")
    solution.profile = profile
    solution.params = params
    return solution


def build_solution(spec):
    """ Dispatch on the rank of a RankSolutionSpec """
    if spec.rank == 0:
        if not isinstance(spec.profile, QuadraticProfile):
            raise ConstructionError(f"rank-0 solutions need a quadratic profile, "
                                    f"got {spec.profile!r}")
        p = spec.profile
        return build_rank0(p.m1, p.m2, spec.T, spec.X, base=p.base)
    return build_rank1(spec)
