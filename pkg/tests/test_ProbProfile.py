import pytest

from backend.core.ProbProfile import ProbProfile
from backend.core.ProbabilityDomainError import ProbabilityDomainError
from backend.core.SerializationError import SerializationError


def test_profile_accessors():
    profile = ProbProfile([0.2, 0.6])
    assert profile.n() == 2
    assert profile.probs() == (0.2, 0.6)
    assert profile.prob(2) == 0.6
    assert profile.nodes() == (1, 2)
    assert profile.original_ids() == (1, 2)


def test_profile_must_be_sorted():
    with pytest.raises(ProbabilityDomainError):
        ProbProfile([0.6, 0.2])


def test_profile_rejects_bad_input():
    with pytest.raises(ProbabilityDomainError):
        ProbProfile([])
    with pytest.raises(ProbabilityDomainError):
        ProbProfile([0.2, 1.2])
    with pytest.raises(ProbabilityDomainError):
        ProbProfile([0.2, 0.3], original_ids=[1, 1])


def test_prob_rejects_unknown_node():
    with pytest.raises(IndexError):
        ProbProfile([0.5]).prob(2)


def test_from_unsorted_keeps_original_positions():
    profile = ProbProfile.from_unsorted([0.9, 0.1, 0.5])
    assert profile.probs() == (0.1, 0.5, 0.9)
    assert profile.original_ids() == (2, 3, 1)
    assert profile.original_id(1) == 2


def test_from_unsorted_is_stable_for_ties():
    profile = ProbProfile.from_unsorted([0.4, 0.2, 0.4])
    assert profile.original_ids() == (2, 1, 3)


def test_rank_within_orders_by_probability_then_id():
    profile = ProbProfile([0.1, 0.3, 0.3, 0.8])
    assert profile.rank_within({4, 3, 2}) == [2, 3, 4]
    assert profile.rank_within({1, 4}) == [1, 4]
    assert profile.subset_probs({4, 1}) == (0.1, 0.8)


def test_json_round_trip():
    profile = ProbProfile.from_unsorted([0.7, 0.2])
    assert ProbProfile.from_json(profile.to_json()) == profile


def test_from_json_validates_schema():
    with pytest.raises(SerializationError):
        ProbProfile.from_json({"probs": [0.1, 2.0]})
    with pytest.raises(SerializationError):
        ProbProfile.from_json({"values": [0.1]})
