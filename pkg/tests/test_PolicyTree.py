import pytest

from backend.core.PolicyError import PolicyError
from backend.core.ProbProfile import ProbProfile
from backend.core.Transcript import Transcript
from backend.ordering.DPState import DPState
from backend.ordering.OrderingRule import rule_policy
from backend.ordering.PolicyTree import PolicyTree


def test_transcript_follows_the_rule():
    policy = rule_policy(ProbProfile([0.1, 0.4, 0.8]), 2)
    transcript, value = policy.transcript((1, 1, 0))
    assert transcript == Transcript([(2, 1), (3, 0), (1, 1)])
    assert value == 1


def test_transcript_stops_once_the_value_is_known():
    policy = rule_policy(ProbProfile([0.1, 0.4, 0.8]), 1)
    transcript, value = policy.transcript((0, 0, 1))
    assert transcript.nodes() == (3,)
    assert value == 1


def test_shape_of_and():
    policy = rule_policy(ProbProfile([0.2, 0.6]), 2)
    assert policy.shape() == (1, 0, (2, 0, 1))


def test_missing_choices_are_rejected():
    with pytest.raises(PolicyError):
        PolicyTree(2, 1, {DPState({1, 2}, 1): 1})
    with pytest.raises(PolicyError):
        PolicyTree(2, 1, {DPState({1, 2}, 1): 3})


def test_json_round_trip():
    policy = rule_policy(ProbProfile([0.1, 0.4, 0.8, 0.9]), 2)
    restored = PolicyTree.from_json(policy.to_json())
    assert restored == policy
    assert restored.name() == "rule"
