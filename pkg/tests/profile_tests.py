from exactwave.media import (ConstantProfile, PowerLawProfile, QuadraticProfile, GenEulerProfile,
                             RiccatiProfile, CustomProfile, CylindricalProfile, profile_from_dict,
                             laplace_invariant, travel_time, characteristics, profile_jet)
from exactwave.riccati import ClosedFormFamily
from exactwave.base import ConfigError, ContractError, DomainError, NoRootError
import pytest
import numpy as np

@pytest.fixture
def x():
    return np.linspace(0.5, 2.5, 21)

@pytest.fixture
def euler():
    # K = |x|^(2/3), a = 3 x^(1/3)
    return GenEulerProfile(0.0, 1.0, 1.0, 0.0)

@pytest.fixture
def tanh_profile():
    return RiccatiProfile(ClosedFormFamily("tanh", -1.0), (0.5, 5.0))

def fd_derivative(f, x, h=1e-5):
    return (f(x + h) - f(x - h)) / (2 * h)

def test_constant(x):
    p = ConstantProfile(2.0)
    assert np.allclose(p(x), 2.0)
    assert np.allclose(p.travel_time(x), x / 2.0)
    assert np.allclose(p.laplace_invariant(x), 0.0)
    assert np.allclose(p.inverse_travel_time(p.travel_time(x)), x)
    with pytest.raises(ContractError):
        ConstantProfile(0.0)

def test_power_law(x):
    p = PowerLawProfile(8.0)
    assert p.beta == 4.0
    assert np.allclose(p(x), x**4)
    assert np.allclose(p.laplace_invariant(x), 2 * x**6)
    assert np.allclose(p.laplace_invariant(x), p.invariant_closed_form(x))
    assert np.allclose(PowerLawProfile(4.0).laplace_invariant(x), 0.0, atol=1e-12)
    assert np.allclose(fd_derivative(p.travel_time, x), 1 / p(x), rtol=1e-7)
    with pytest.raises(DomainError):
        p(-1.0)
    with pytest.raises(DomainError):
        p.inverse_travel_time(1.0)

def test_quadratic(x):
    p = QuadraticProfile(1.0, 0.0)
    assert p.singular_points == (0.0,)
    assert p.component(1.0) == (0.0, np.inf)
    assert np.allclose(p(x), x**2)
    assert np.allclose(p.laplace_invariant(x), 0.0)
    assert np.allclose(p.travel_time(x), -1 / x)
    assert np.isclose(p.inverse_travel_time(-0.5), 2.0)
    t_plus, t_minus = p.characteristics(0.3, 2.0)
    assert np.isclose(t_plus, -0.2)
    assert np.isclose(t_minus, 0.8)
    based = QuadraticProfile(1.0, 0.0, base=1.0)
    assert np.allclose(based.travel_time(x), 1 - 1 / x)
    with pytest.raises(DomainError):
        based.travel_time(-1.0)
    with pytest.raises(DomainError):
        p(0.0)
    with pytest.raises(DomainError):
        QuadraticProfile(1.0, 0.0, base=0.0)

def test_gen_euler(x, euler):
    assert euler.singular_points == (0.0,)
    assert np.allclose(euler(x), x**(2 / 3))
    assert np.allclose(euler.travel_time(x), 3 * np.cbrt(x))
    assert np.allclose(euler.laplace_invariant(x), -2 / 9 * x**(-2 / 3))
    assert np.allclose(euler.inverse_travel_time(euler.travel_time(x)), x)
    # the travel time solves a' = r/A1^2 with A1 = m x + m1 - A a
    params = euler.riccati_params()
    a = euler.travel_time(x)
    assert np.allclose(params.r / params.lead(x, a)**2, 1 / euler(x))
    based = GenEulerProfile(0.0, 1.0, 1.0, 0.0, base=1.0)
    params = based.riccati_params()
    a = based.travel_time(x)
    assert np.allclose(params.r / params.lead(x, a)**2, 1 / based(x))
    with pytest.raises(ContractError):
        GenEulerProfile(1.0, 2.0, 2.0, 4.0)

def test_gen_euler_both_factors(x):
    p = GenEulerProfile(1.0, 1.0, 1.0, -3.0)
    assert p.singular_points == (-1.0, 3.0)
    K = np.abs(x - 3)**(2 / 3) * np.abs(x + 1)**(4 / 3)
    assert np.allclose(p(x), K)
    assert np.allclose(fd_derivative(p.travel_time, x), 1 / K, rtol=1e-7)

def test_riccati_profile(tanh_profile):
    family = tanh_profile.family
    x = np.linspace(0.3, 3.0, 12)
    y = tanh_profile.travel_time(x)
    assert np.allclose(family.x(y), x, atol=1e-11)
    assert np.allclose(tanh_profile(x), np.tanh(y)**2)
    K = tanh_profile.jet(x).coeffs
    assert np.allclose(K[1], fd_derivative(tanh_profile, x), rtol=1e-5)
    assert np.allclose(K[2], fd_derivative(lambda v: tanh_profile.jet(v).coeffs[1], x),
                       rtol=1e-5)
    assert np.allclose(fd_derivative(tanh_profile.travel_time, x), 1 / K[0], rtol=1e-5)
    assert np.allclose(tanh_profile.inverse_travel_time(y), x)

def test_riccati_profile_negative_r():
    p = RiccatiProfile("tan", (0.2, 1.2))
    assert p.sign == -1.0
    x = np.linspace(p.domain[0] + 0.05, p.domain[1] - 0.05, 7)
    y = p.invert(x)
    assert np.allclose(p(x), np.tan(y)**2)
    assert np.allclose(p.travel_time(x), -y)
    assert np.allclose(fd_derivative(p.travel_time, x), 1 / p(x), rtol=1e-5)

def test_riccati_profile_exceptions():
    with pytest.raises(ContractError):
        RiccatiProfile("tan", (0.0, 2.0))
    with pytest.raises(DomainError):
        RiccatiProfile("tanh", (0.5, 5.0))(10.0)

def test_custom():
    with pytest.warns(UserWarning):
        p = CustomProfile.from_polynomial([0.0, 0.0, 1.0], domain=(0.0, np.inf), base=1.0)
    assert p.poly == [0.0, 0.0, 1.0]
    assert np.isclose(p.travel_time(2.0), 0.5, atol=1e-12)
    assert np.isclose(p.inverse_travel_time(0.25, bracket=(0.5, 2.0)), 4 / 3)
    with pytest.raises(NoRootError):
        p.inverse_travel_time(0.9, bracket=(0.5, 2.0))
    with pytest.warns(UserWarning):
        free = CustomProfile(lambda x: (1.0 + x**2, 2 * x, 2.0))
    with pytest.raises(ContractError):
        free.travel_time(1.0)
    with pytest.warns(UserWarning):
        signed = CustomProfile(lambda x: (x, 1.0, 0.0), domain=(-1.0, 1.0))
    with pytest.raises(DomainError):
        signed.jet(-0.5)
    with pytest.raises(TypeError):
        CustomProfile(2.0)

def test_cylindrical():
    y = np.linspace(-1.0, 1.0, 11)
    flat = CylindricalProfile(PowerLawProfile(2.0))
    assert flat.domain == (-np.inf, np.inf)
    assert np.allclose(flat(y), 1.0)
    assert np.allclose(flat.jet(y).coeffs[1:], 0.0, atol=1e-12)
    assert np.allclose(flat.travel_time(y), y)
    steep = CylindricalProfile(PowerLawProfile(4.0))
    assert np.allclose(steep(y), np.exp(y))
    assert np.allclose(steep.jet(y).coeffs[2], np.exp(y))
    assert np.allclose(steep.travel_time(y), -np.exp(-y))

def test_from_dict():
    p = profile_from_dict({"kind": "gen_euler", "s1": 0, "s2": 1, "c1": 1, "c2": 0, "base": 1.0})
    assert isinstance(p, GenEulerProfile)
    assert p.base == 1.0
    assert p.to_dict() == {"kind": "gen_euler", "s1": 0.0, "s2": 1.0, "c1": 1.0, "c2": 0.0,
                           "base": 1.0}
    r = profile_from_dict({"kind": "riccati_implicit", "family": "tanh", "b": -1.0,
                           "y_bracket": [0.5, 5.0]})
    assert r.family.b == -1.0
    with pytest.warns(UserWarning):
        c = profile_from_dict({"kind": "custom", "poly": [1.0, 0.5], "domain": [None, None],
                               "base": 0.0})
    assert np.allclose(c.singular_points, [-2.0])
    cyl = profile_from_dict({"kind": "cylindrical", "radial": {"kind": "power_law", "alpha": 2}})
    assert isinstance(cyl.radial, PowerLawProfile)
    with pytest.raises(ConfigError):
        profile_from_dict({"kind": "hyperbolic"})
    with pytest.raises(ConfigError):
        profile_from_dict({"kind": "constant", "velocity": 2.0})
    with pytest.raises(ConfigError):
        profile_from_dict({"kind": "quadratic", "m1": 1.0})
    with pytest.raises(ConfigError):
        profile_from_dict({"kind": "quadratic", "m1": "one", "m2": 0.0})
    with pytest.raises(ConfigError):
        profile_from_dict({"kind": "cylindrical", "base": 1.0,
                           "radial": {"kind": "power_law", "alpha": 2}})

def test_gen_euler_jet():
    # S = x and C = 1 give K = x^(4/3)
    p = GenEulerProfile(1.0, 0.0, 0.0, 1.0)
    assert np.allclose(p.jet(1.0).coeffs, (1.0, 4 / 3, 4 / 9))
    x = np.array([0.5, 1.0, 2.0])
    assert np.allclose(p.travel_time(x), -3 * x**(-1 / 3))

def test_random_quadratics_have_zero_invariant():
    rng = np.random.default_rng(3)
    for m1, m2 in rng.uniform(0.5, 2.0, (20, 2)):
        p = QuadraticProfile(m1, m2)
        x = np.linspace(0.1, 3.0, 11)
        assert np.allclose(p.laplace_invariant(x), 0.0, atol=1e-12)

def test_module_functions(euler):
    assert np.allclose(profile_jet(euler, 1.0).coeffs, (1.0, 2 / 3, -2 / 9))
    assert np.isclose(travel_time(euler, 8.0), 6.0)
    assert np.isclose(laplace_invariant(euler, 1.0), -2 / 9)
    assert np.allclose(characteristics(euler, 0.5, 8.0), (6.5, -5.5))
