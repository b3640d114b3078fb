import math

import pytest

from backend.core.EnumerationLimitError import EnumerationLimitError
from backend.core.FunctionSpec import FunctionSpec
from backend.core.FunctionSpecError import FunctionSpecError
from backend.worstcase.CodeLengthPlan import CodeLengthPlan, compositions, kraft_plan, multinomial
from backend.worstcase.FoolingSets import gen_threshold_fooling_count


def test_compositions_and_multinomial():
    assert list(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert multinomial((1, 1)) == 2
    assert multinomial((2, 1, 1)) == 12


def test_single_instance_plans_are_complete():
    for spec, block_length in ((FunctionSpec.threshold(2, 1), 1), (FunctionSpec.threshold(3, 2), 2)):
        assert kraft_plan(spec, block_length).kraft_sum() == pytest.approx(1.0, abs=1e-12)


def test_threshold_plan_counts():
    plan = kraft_plan(FunctionSpec.threshold(3, 2), 4)
    assert plan.residual_counts() == (3, 3)
    assert plan.total_count() == 6


def test_every_block_costs_the_same():
    plan = kraft_plan(FunctionSpec.threshold(4, 2), 8)
    totals = {round(plan.total_bits(w), 9) for w in plan.weight_vectors()}
    assert len(totals) == 1
    assert plan.worst_case_total() == pytest.approx(8 * math.log2(10))


def test_integer_lengths_satisfy_kraft():
    plan = kraft_plan(FunctionSpec.threshold(5, 3), 16)
    assert plan.integer_kraft_sum() <= 1.0 + 1e-9
    assert plan.integer_worst_case_total() <= plan.worst_case_total() + 1.0


def test_general_threshold_plan_merges_decided_values():
    plan = kraft_plan(FunctionSpec.general_threshold(2, (2, 2, 2)), 8)
    assert plan.residual_counts() == (5, 3, 1)
    assert plan.total_count() == gen_threshold_fooling_count(2, (2, 2, 2)) == 9
    assert plan.kraft_sum() == pytest.approx(1.0, abs=1e-9)


def test_large_block_lengths_do_not_overflow():
    assert kraft_plan(FunctionSpec.threshold(6, 3), 2000).kraft_sum() == pytest.approx(1.0, abs=1e-6)


def test_plan_rejects_bad_input():
    with pytest.raises(FunctionSpecError):
        kraft_plan(FunctionSpec.parity(3), 4)
    with pytest.raises(FunctionSpecError):
        CodeLengthPlan(0, ["0"], [1])
    with pytest.raises(FunctionSpecError):
        CodeLengthPlan(2, ["0", "1"], [1, 0])
    with pytest.raises(FunctionSpecError):
        kraft_plan(FunctionSpec.threshold(3, 2), 2).length((1, 0))


def test_enumeration_is_capped():
    plan = CodeLengthPlan(2 ** 11, [str(k) for k in range(4)], [1, 2, 3, 4])
    with pytest.raises(EnumerationLimitError):
        plan.kraft_sum()


def test_plan_json_keeps_exact_counts():
    document = kraft_plan(FunctionSpec.threshold(40, 20), 2).to_json()
    assert document["symbols"][0]["residual_count"] == str(math.comb(40, 20))


def test_and_plan_total():
    for n in range(2, 6):
        plan = kraft_plan(FunctionSpec.and_function(n), 3)
        assert plan.worst_case_total() == pytest.approx(3 * math.log2(n + 1))
