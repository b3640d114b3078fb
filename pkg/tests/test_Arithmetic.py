import math

import pytest
from hypothesis import given, settings, strategies as st

from backend.core.Arithmetic import binary_entropy, binom, check_probability, log2, within_tolerance
from backend.core.ProbabilityDomainError import ProbabilityDomainError


def test_binary_entropy_values():
    assert binary_entropy(0.5) == 1.0
    assert binary_entropy(0.0) == 0.0
    assert binary_entropy(1.0) == 0.0
    assert binary_entropy(0.2) == pytest.approx(0.721928, abs=1e-6)


@pytest.mark.property_based
@given(p=st.floats(min_value=0.0, max_value=1.0))
@settings(max_examples=200)
def test_binary_entropy_is_symmetric_and_bounded(p):
    assert 0.0 <= binary_entropy(p) <= 1.0
    assert binary_entropy(p) == pytest.approx(binary_entropy(1.0 - p), abs=1e-12)


@pytest.mark.parametrize("p", [-0.1, 1.5, float("nan"), "abc"])
def test_probability_domain(p):
    with pytest.raises(ProbabilityDomainError):
        check_probability(p)


def test_probability_domain_error_is_a_value_error():
    with pytest.raises(ValueError):
        binary_entropy(2.0)


def test_binom():
    assert binom(4, 2) == 6
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0
    assert binom(30, 15) == 155117520


def test_binom_matches_pascal_triangle():
    row = [1]
    for n in range(1, 40):
        row = [1] + [row[k - 1] + row[k] for k in range(1, n)] + [1]
        assert [binom(n, k) for k in range(n + 1)] == row


def test_log2_handles_large_integers():
    assert log2(2 ** 2000) == 2000.0
    assert log2(3) == pytest.approx(math.log2(3))
    with pytest.raises(ValueError):
        log2(0)


def test_within_tolerance():
    assert within_tolerance(1.0, 1.0 + 1e-10)
    assert not within_tolerance(1.0, 1.001)
    assert within_tolerance(1.0, 1.001, tolerance=1e-2)
