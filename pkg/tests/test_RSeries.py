import pytest
from hypothesis import given, settings, strategies as st

from backend.avgcase.RSeries import RSeries, r_bound, r_value, r_value_recursive
from backend.core.FunctionSpecError import FunctionSpecError
from backend.core.ProbabilityDomainError import ProbabilityDomainError


def test_r_value_for_or():
    assert r_value(4, 1, 0.5) == pytest.approx(0.5 + 0.25 + 0.125)


def test_r_vanishes_when_theta_is_n():
    assert r_value(5, 5, 0.3) == 0.0


@pytest.mark.property_based
@given(n=st.integers(min_value=1, max_value=25), data=st.data(), p=st.floats(min_value=0.01, max_value=0.99))
@settings(max_examples=100)
def test_recursive_form_agrees(n, data, p):
    theta = data.draw(st.integers(min_value=0, max_value=n))
    assert r_value_recursive(n, theta, p) == pytest.approx(r_value(n, theta, p), rel=1e-9, abs=1e-9)


def test_series_is_bounded_and_non_decreasing():
    series = RSeries(3, 0.4, range(3, 41))
    assert series.within_bound()
    assert series.non_decreasing()
    assert series.bound() == pytest.approx(r_bound(3, 0.4)) == pytest.approx(4.5)
    assert max(series.values().values()) == pytest.approx(series.bound(), rel=1e-3)


def test_domain_checks():
    with pytest.raises(ProbabilityDomainError):
        r_value(4, 2, 0.0)
    with pytest.raises(FunctionSpecError):
        r_value(2, 3, 0.5)
