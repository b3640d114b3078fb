import pytest

from backend.core.ProbProfile import ProbProfile
from backend.core.ProbabilityDomainError import ProbabilityDomainError
from backend.ordering.PulseMapping import profile_pulse_mappings, pulse_mapping


def test_pulse_marks_the_rarer_value():
    low = pulse_mapping(0.3)
    assert low.pulse_value() == 1
    assert low.energy() == pytest.approx(0.3)
    high = pulse_mapping(0.9)
    assert high.pulse_value() == 0
    assert high.energy() == pytest.approx(0.1)
    assert pulse_mapping(0.5).pulse_value() == 1


def test_encode_decode():
    mapping = pulse_mapping(0.9)
    assert mapping.encode(0) == 1
    assert mapping.encode(1) == 0
    assert [mapping.decode(mapping.encode(bit)) for bit in (0, 1)] == [0, 1]


def test_profile_mappings():
    mappings = profile_pulse_mappings(ProbProfile([0.2, 0.7]))
    assert [mappings[node].pulse_value() for node in (1, 2)] == [1, 0]


def test_invalid_probability():
    with pytest.raises(ProbabilityDomainError):
        pulse_mapping(1.2)
