from exactwave.solutions import (RankSolutionSpec, build_rank0, build_rank1, build_solution,
                                 residual_1d, residual_norms, CombinedSolution)
from exactwave.media import ConstantProfile, GenEulerProfile, QuadraticProfile, RiccatiProfile
from exactwave.riccati import RiccatiParams
from exactwave.waveforms import GaussianWaveform, SineWaveform, CompactBumpWaveform
from exactwave.base import ConstructionError, ContractError
import pytest
import numpy as np

@pytest.fixture
def grid():
    return np.linspace(0.0, 1.0, 21), np.linspace(0.5, 2.0, 31)

@pytest.fixture
def rank0():
    return build_rank0(1.0, 0.0, GaussianWaveform(-0.5, 0.3), GaussianWaveform(0.8, 0.3))

@pytest.fixture
def euler_rank1():
    spec = RankSolutionSpec(1, GenEulerProfile(0.0, 1.0, 1.0, 0.0),
                            CompactBumpWaveform(3.5, 1.5), CompactBumpWaveform(-2.5, 1.5),
                            sample_interval=(0.5, 2.0))
    return build_rank1(spec)

def test_rank0_form(rank0):
    T, X = rank0.T, rank0.X
    t, x = 0.4, 1.3
    a = -1 / x
    assert np.isclose(rank0(t, x), x * (T(t + a) + X(t - a)))
    assert isinstance(rank0.profile, QuadraticProfile)
    assert rank0.describe()["rank"] == 0

def test_rank0_residual(rank0, grid):
    report = residual_norms(rank0, rank0.profile, *grid)
    assert report.per_point.shape == (21, 31)
    assert report.scale > 0
    assert report.normalized_linf < 1e-10

def test_derivatives_match_differences(rank0):
    t, x, h = 0.4, np.linspace(0.6, 1.8, 7), 1e-4
    u = rank0
    fd_xx = (u(t, x + h) - 2 * u(t, x) + u(t, x - h)) / h**2
    fd_tt = (u(t + h, x) - 2 * u(t, x) + u(t - h, x)) / h**2
    fd_tx = (u(t + h, x + h) - u(t + h, x - h) - u(t - h, x + h) + u(t - h, x - h)) / (4 * h**2)
    assert np.allclose(u.u_xx(t, x), fd_xx, rtol=1e-4, atol=1e-4)
    assert np.allclose(u.u_tt(t, x), fd_tt, rtol=1e-4, atol=1e-4)
    assert np.allclose(u.u_tx(t, x), fd_tx, rtol=1e-4, atol=1e-4)
    assert np.allclose(u.t_jet(t, x).coeffs[2], u.u_tt(t, x))

def test_rank0_constant_speed(grid):
    # m1 = 0 gives K = m2^2 and a = x/m2^2
    u = build_rank0(0.0, 1.5, SineWaveform(2.0), SineWaveform(1.0, 0.3))
    assert np.allclose(u.profile(grid[1]), 1.5**2)
    assert residual_norms(u, u.profile, *grid).normalized_linf < 1e-10

def test_rank1_gen_euler(euler_rank1, grid):
    u = euler_rank1
    assert u.describe()["rank"] == 1
    assert np.isclose(u.params.r, 9.0)
    report = residual_norms(u, u.profile, *grid)
    assert report.scale > 0
    assert report.normalized_linf < 1e-10
    # A = 1 and A1 = -a
    t, x = 0.3, 1.1
    a = 3 * np.cbrt(x)
    T, X = u.T, u.X
    expected = T(t + a) + X(t - a) - a * (T.derivatives(t + a, 1)[1] - X.derivatives(t - a, 1)[1])
    assert np.isclose(u(t, x), expected)

def test_rank1_riccati_profile():
    profile = RiccatiProfile("tanh", (0.5, 5.0))
    spec = RankSolutionSpec(1, profile, SineWaveform(1.0), SineWaveform(2.0, 0.5))
    u = build_solution(spec)
    report = residual_norms(u, profile, np.linspace(0.0, 1.0, 11), np.linspace(0.3, 3.0, 15))
    assert report.normalized_linf < 1e-9

def test_construction_errors():
    T, X = SineWaveform(), SineWaveform()
    with pytest.raises(ConstructionError):
        build_rank1(RankSolutionSpec(1, ConstantProfile(1.0), T, X))
    wrong = RiccatiParams(r=2.0, m=0.0, m1=0.0, c1=0.0, c2=1.0)
    with pytest.raises(ConstructionError):
        build_rank1(RankSolutionSpec(1, GenEulerProfile(0.0, 1.0, 1.0, 0.0), T, X, params=wrong,
                                     sample_interval=(0.5, 2.0)))
    with pytest.raises(ConstructionError):
        build_solution(RankSolutionSpec(0, ConstantProfile(1.0), T, X))
    with pytest.raises(ContractError):
        build_rank1(RankSolutionSpec(0, GenEulerProfile(0.0, 1.0, 1.0, 0.0), T, X))

def test_order_limits(rank0, euler_rank1):
    with pytest.raises(ContractError):
        rank0.x_jet(0.1, 1.0, 2, t_order=2)
    with pytest.raises(ContractError):
        euler_rank1.x_jet(0.1, 1.0, 2, t_order=1)
    with pytest.raises(ContractError):
        rank0.x_jet(0.1, 1.0, 3)

def test_combinations(rank0, grid):
    other = build_rank0(1.0, 0.0, SineWaveform(3.0), GaussianWaveform(0.0, 0.5))
    combo = rank0 + 2.0 * other - other
    assert isinstance(combo, CombinedSolution)
    assert len(combo.terms) == 3
    t, x = 0.2, np.linspace(0.6, 1.9, 5)
    assert np.allclose(combo(t, x), rank0(t, x) + other(t, x))
    assert residual_norms(combo, rank0.profile, *grid).normalized_linf < 1e-10

def test_time_shift(rank0, euler_rank1):
    for u in (rank0, euler_rank1):
        shifted = u.time_shifted(0.25)
        assert np.isclose(shifted(0.1, 1.2), u(0.35, 1.2))
        assert abs(residual_1d(shifted, u.profile, 0.1, 1.2)) < 1e-10 * (1 + abs(u.u_tt(0.35, 1.2)))

def test_empty_grid(rank0):
    with pytest.raises(ContractError):
        residual_norms(rank0, rank0.profile, [], np.linspace(0.5, 1.0, 5))

def test_random_rank0():
    rng = np.random.default_rng(5)
    t, x = np.linspace(0.0, 1.0, 64), np.linspace(0.5, 2.0, 64)
    for m1, m2 in rng.uniform(0.2, 2.0, (10, 2)):
        T = GaussianWaveform(rng.uniform(-1.0, 1.0), 0.4)
        X = GaussianWaveform(rng.uniform(-1.0, 1.0), 0.4)
        u = build_rank0(m1, m2, T, X)
        assert np.allclose(u.profile(x), (m1 * x + m2)**2)
        assert residual_norms(u, u.profile, t, x).normalized_linf < 1e-10

def random_gen_euler(rng):
    """ Coefficients with |s1|, |c1| and the determinant bounded away
    from zero, and a grid interval right of both singular points
    """
    while True:
        s1, c1 = rng.uniform(0.3, 2.0, 2) * rng.choice([-1.0, 1.0], 2)
        s2, c2 = rng.uniform(-2.0, 2.0, 2)
        if abs(c1 * s2 - c2 * s1) > 0.3:
            break
    lo = max(-s2 / s1, -c2 / c1) + 0.5
    return GenEulerProfile(s1, s2, c1, c2), (lo, lo + 1.5)

def test_random_rank1_gen_euler():
    rng = np.random.default_rng(6)
    t = np.linspace(0.0, 1.0, 64)
    for _ in range(10):
        profile, interval = random_gen_euler(rng)
        spec = RankSolutionSpec(1, profile, SineWaveform(1.0), SineWaveform(1.5, 0.3),
                                sample_interval=interval)
        u = build_rank1(spec)
        report = residual_norms(u, profile, t, np.linspace(*interval, 64))
        assert report.normalized_linf < 1e-10

def test_rank1_gen_euler_steep(grid):
    # s = x and c = 1 give K^2 = x^(8/3)
    profile = GenEulerProfile(1.0, 0.0, 0.0, 1.0)
    spec = RankSolutionSpec(1, profile, GaussianWaveform(-3.0, 0.5), GaussianWaveform(3.0, 0.5),
                            sample_interval=(0.5, 2.0))
    u = build_rank1(spec)
    assert np.allclose(u.profile(grid[1])**2, grid[1]**(8 / 3))
    assert residual_norms(u, profile, *grid).normalized_linf < 1e-10

def test_wrong_profile_is_detected(rank0, grid):
    report = residual_norms(rank0, ConstantProfile(1.0), *grid)
    assert report.linf > 1e-3

def test_mixed_partials(rank0, euler_rank1):
    t, x, h = 0.4, np.linspace(0.6, 1.8, 7), 1e-5
    for u in (rank0, euler_rank1):
        u_x = lambda tt, xx: u.x_jet(tt, xx, 1).coeffs[1]
        u_t = lambda tt, xx: u.x_jet(tt, xx, 0, 1).value
        d_t_of_u_x = (u_x(t + h, x) - u_x(t - h, x)) / (2 * h)
        d_x_of_u_t = (u_t(t, x + h) - u_t(t, x - h)) / (2 * h)
        assert np.allclose(u.u_tx(t, x), d_t_of_u_x, rtol=1e-6, atol=1e-8)
        assert np.allclose(u.u_tx(t, x), d_x_of_u_t, rtol=1e-6, atol=1e-8)
