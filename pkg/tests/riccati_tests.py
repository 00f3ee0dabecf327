from exactwave.riccati import (RiccatiParams, ClosedFormFamily, integrate_ode, integrate_family,
                               invert_monotone, closed_form_x, riccati_rhs, POLE_GAP)
from exactwave.base import BlowUpError, ContractError, DomainError, NoRootError
import pytest
import numpy as np

SPANS = {"tanh": (0.0, 2.0), "tan": (0.0, 1.0), "exp_ratio": (-1.0, 0.5), "sqrt3": (0.0, 0.8)}

@pytest.fixture
def tanh():
    return ClosedFormFamily("tanh")

@pytest.fixture
def tan():
    return ClosedFormFamily("tan")

def test_params():
    params = RiccatiParams(r=2.0, m=1.0, m1=0.5, c1=1.0, c2=-1.0)
    assert params.amplitude(2.0) == 1.0
    assert params.lead(2.0, 0.5) == 2.0
    assert params.rhs(0.5, 2.0) == 2.0
    with pytest.raises(ContractError):
        RiccatiParams(r=0.0, m=1.0, m1=0.0, c1=0.0, c2=1.0)
    with pytest.raises(ContractError):
        RiccatiParams(r=1.0, m=np.nan, m1=0.0, c1=0.0, c2=1.0)

@pytest.mark.parametrize("name", sorted(SPANS))
def test_closed_form_solves_riccati(name):
    family = ClosedFormFamily(name)
    y = np.linspace(*SPANS[name], 41)
    h = 1e-5
    numeric = (family.x(y + h) - family.x(y - h)) / (2 * h)
    assert np.allclose(numeric, family.dxdy(y), rtol=1e-6, atol=1e-7)

@pytest.mark.parametrize("name", sorted(SPANS))
def test_integration_matches_closed_form(name):
    family = ClosedFormFamily(name)
    path = integrate_family(family, *SPANS[name], n_samples=101)
    assert path.pole is None
    assert len(path.y) == 101
    deviation = np.abs(path.x - family.x(path.y)) / np.maximum(1.0, np.abs(path.x))
    assert np.max(deviation) < 1e-8

def test_tanh_branches():
    y = np.linspace(0.1, 1.0, 5)
    assert np.allclose(ClosedFormFamily("tanh", -1.0).x(y), y - np.tanh(y))
    assert np.allclose(ClosedFormFamily("tanh", 0.0).x(y), y + 1.0)
    assert np.allclose(ClosedFormFamily("tanh", 1.0).x(y), y - 1.0 / np.tanh(y))

def test_poles(tan):
    assert np.allclose(tan.poles(0.0, 5.0), [np.pi / 2, 3 * np.pi / 2])
    assert np.allclose(tan.poles(5.0, 0.0), [3 * np.pi / 2, np.pi / 2])
    with pytest.raises(DomainError):
        tan.x(np.pi / 2)
    path = integrate_family(tan, 0.0, 2.0, n_samples=51)
    assert np.isclose(path.pole, np.pi / 2)
    assert np.isclose(path.y[-1], np.pi / 2 - POLE_GAP)

def test_blow_up(tan):
    with pytest.raises(BlowUpError) as info:
        integrate_ode(tan.params, 0.0, 0.0, 2.0)
    assert abs(info.value.last_valid - np.pi / 2) < 1e-6

def test_zero_length_path(tanh):
    path = integrate_ode(tanh.params, 0.3, 1.0, 0.3)
    assert len(path.y) == 1
    assert path.at(0.3) == 1.0
    with pytest.raises(ContractError):
        path.at(0.4)

def test_critical_points(tanh, tan):
    assert np.allclose(tanh.critical_points(-1.0, 1.0), [0.0], atol=1e-12)
    assert tanh.critical_value() == (0.0, 0.0)
    with pytest.raises(ContractError):
        tan.critical_points(0.0, 2.0)

def test_invert_monotone(tanh, tan):
    for x in [-2.0, 1e-9, 0.5, 3.0]:
        y = invert_monotone(tanh, x)
        assert np.isclose(tanh.x(y), x, rtol=0, atol=1e-11 * max(1.0, abs(x)))
    y = invert_monotone(tan, -0.3, bracket=(0.0, 1.0))
    assert np.isclose(y - np.tan(y), -0.3, atol=1e-11)
    with pytest.raises(NoRootError):
        invert_monotone(tan, 5.0, bracket=(0.0, 1.0))
    with pytest.raises(ContractError):
        invert_monotone(tan, -0.3)

def test_unknown_family():
    with pytest.raises(ContractError):
        ClosedFormFamily("cosh")

@pytest.mark.parametrize("name", sorted(SPANS))
def test_rhs_matches_closed_form_slope(name):
    family = ClosedFormFamily(name)
    y = np.linspace(*SPANS[name], 9)
    x = closed_form_x(family, y)
    assert np.allclose(riccati_rhs(family.params, y, x), family.dxdy(y), rtol=1e-9, atol=1e-12)

def test_invert_monotone_absolute_accuracy(tanh):
    for x in [10.0, -10.0, 0.3]:
        y = invert_monotone(tanh, x)
        assert abs(closed_form_x(tanh, y) - x) < 1e-12
    # y = 0 is left out: x(y) is flat there
    y = np.linspace(-2.0, 2.0, 40)
    inverted = [invert_monotone(tanh, xi) for xi in closed_form_x(tanh, y)]
    assert np.allclose(inverted, y, rtol=0, atol=1e-9)

def test_tanh_asymptote(tanh):
    y = np.array([-8.0, -5.0, -4.1, 4.1, 5.0, 8.0])
    assert np.all(np.abs(closed_form_x(tanh, y) - (y - np.sign(y))) < 1e-3)
