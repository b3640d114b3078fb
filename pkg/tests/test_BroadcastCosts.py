import pytest
from hypothesis import given, settings, strategies as st

from backend.core.Arithmetic import binary_entropy
from backend.core.BroadcastCost import BroadcastCost
from backend.core.BroadcastCosts import COST_KINDS, BinaryEntropyCost, PulseMinCost, UnitCost, check_cost_hypotheses, get_cost
from backend.core.FunctionSpecError import FunctionSpecError


def test_cost_values():
    assert UnitCost()(0.3) == 1.0
    assert BinaryEntropyCost()(0.2) == pytest.approx(binary_entropy(0.2))
    assert PulseMinCost()(0.3) == pytest.approx(0.3)
    assert PulseMinCost()(0.9) == pytest.approx(0.1)


def test_get_cost():
    for name in COST_KINDS:
        assert get_cost(name).name() == name
    with pytest.raises(FunctionSpecError):
        get_cost("energy")


def test_cost_is_abstract():
    with pytest.raises(TypeError):
        BroadcastCost()


@pytest.mark.property_based
@given(name=st.sampled_from(sorted(COST_KINDS)), p=st.floats(min_value=0.0, max_value=1.0))
@settings(max_examples=200)
def test_costs_are_symmetric(name, p):
    cost = get_cost(name)
    assert cost(p) == pytest.approx(cost(1.0 - p), abs=1e-12)


@pytest.mark.parametrize("name", sorted(COST_KINDS))
def test_cost_hypotheses_hold_for_shipped_costs(name):
    assert check_cost_hypotheses(get_cost(name)) == (True, True)


def test_cost_hypotheses_detect_asymmetry():
    class LinearCost(BroadcastCost):
        def name(self):
            return "linear"

        def cost(self, p):
            return p

    symmetric, _ = check_cost_hypotheses(LinearCost())
    assert not symmetric
