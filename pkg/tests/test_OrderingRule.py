import math

import pytest
from hypothesis import given, settings, strategies as st

from backend.core.BroadcastCosts import COST_KINDS, get_cost
from backend.core.PolicyError import PolicyError
from backend.core.ProbProfile import ProbProfile
from backend.ordering.DPTable import solve_dp
from backend.ordering.OrderingRule import (ascending_policy, descending_policy, policy_cost, rule_choice, rule_matches_dp,
                                           rule_policy, static_policy, verify_rule)
from backend.ordering.PolicyTree import PolicyTree


def test_rule_root_node():
    profile = ProbProfile([0.1, 0.4, 0.8])
    assert rule_policy(profile, 2).transmitter(rule_policy(profile, 2).root_state()) == 2
    assert rule_policy(profile, 1).transmitter(rule_policy(profile, 1).root_state()) == 3
    assert rule_policy(profile, 3).transmitter(rule_policy(profile, 3).root_state()) == 1


def test_rule_reranks_within_the_remaining_nodes():
    profile = ProbProfile([0.1, 0.4, 0.8])
    policy = rule_policy(profile, 2)
    zero, one = policy.children(policy.root_state())
    assert rule_choice(profile, zero) == 1
    assert rule_choice(profile, one) == 3


def test_ascending_order_is_strictly_worse_for_or():
    profile = ProbProfile([0.1, 0.2, 0.3])
    cost = get_cost("entropy")
    rule = policy_cost(rule_policy(profile, 1), profile, 1, cost)
    ascending = policy_cost(ascending_policy(profile, 1), profile, 1, cost)
    assert rule == pytest.approx(solve_dp(profile, 1, cost).root_value())
    assert ascending > rule + 1e-3
    assert policy_cost(descending_policy(profile, 1), profile, 1, cost) == pytest.approx(rule)


def test_static_policy_needs_a_permutation():
    with pytest.raises(PolicyError):
        static_policy(ProbProfile([0.2, 0.3]), 1, (1, 1))


def test_policy_cost_rejects_a_mismatched_policy():
    profile = ProbProfile([0.2, 0.3])
    with pytest.raises(PolicyError):
        policy_cost(rule_policy(profile, 1), profile, 2, get_cost("unit"))


@pytest.mark.property_based
@given(probs=st.lists(st.floats(min_value=0.0, max_value=1.0), min_size=1, max_size=6),
       cost_name=st.sampled_from(sorted(COST_KINDS)), data=st.data())
@settings(max_examples=60, deadline=None)
def test_rule_is_in_the_dp_argmin(probs, cost_name, data):
    profile = ProbProfile(sorted(probs))
    theta = data.draw(st.integers(min_value=1, max_value=profile.n()))
    check = verify_rule(profile, theta, get_cost(cost_name))
    assert check.valid(), check.counterexample()
    assert rule_matches_dp(profile, theta, get_cost(cost_name), tolerance=1e-9)


def test_policy_on_a_decided_root_costs_nothing():
    profile = ProbProfile([0.2, 0.3])
    assert policy_cost(PolicyTree(2, 0, {}), profile, 0, get_cost("unit")) == 0.0


def smoothstep(p):
    return p * p * (3.0 - 2.0 * p)


@pytest.mark.property_based
@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=20), min_size=1, max_size=7), st.data())
def test_rule_policy_depends_only_on_the_order(grid_points, data):
    probs = sorted(k / 20 for k in grid_points)
    profile = ProbProfile(probs)
    theta = data.draw(st.integers(min_value=1, max_value=profile.n()))
    policy = rule_policy(profile, theta)
    for transform in (smoothstep, math.sqrt, lambda p: p * p, lambda p: (p + 1.0) / 2.0):
        assert rule_policy(ProbProfile([transform(p) for p in probs]), theta) == policy


@pytest.mark.parametrize("probs", [(0.2, 0.6, 1.0), (0.0, 0.4, 1.0), (1.0, 1.0, 1.0), (0.0, 0.0, 0.7), (0.0, 0.5, 0.5, 1.0)])
@pytest.mark.parametrize("cost_name", sorted(COST_KINDS))
def test_rule_agrees_with_the_dp_at_certain_nodes(probs, cost_name):
    profile = ProbProfile(probs)
    cost = get_cost(cost_name)
    for theta in range(1, profile.n() + 1):
        table = solve_dp(profile, theta, cost)
        assert math.isfinite(table.root_value())
        assert verify_rule(profile, theta, cost, table)
        assert rule_matches_dp(profile, theta, cost)
