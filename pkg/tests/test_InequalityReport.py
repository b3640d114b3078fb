import pytest

from backend.core.BroadcastCosts import get_cost
from backend.core.ProbProfile import ProbProfile
from backend.ordering.InequalityReport import S1_BOUND, S2_BOUND, T_BOUND, InequalityEntry, InequalityReport, check_appendix_inequalities


@pytest.mark.parametrize("cost_name", ["unit", "entropy", "pulse"])
def test_bounds_hold_on_every_subset(cost_name):
    report = check_appendix_inequalities(ProbProfile([0.1, 0.35, 0.6, 0.85]), None, get_cost(cost_name))
    assert report.holds(), report.worst()
    assert {entry.kind for entry in report.entries()} == {T_BOUND, S1_BOUND, S2_BOUND}


def test_sampled_subsets_are_reproducible():
    profile = ProbProfile([0.2, 0.3, 0.5, 0.7, 0.9])
    first = check_appendix_inequalities(profile, 2, get_cost("unit"), samples=10, seed=4)
    second = check_appendix_inequalities(profile, 2, get_cost("unit"), samples=10, seed=4)
    assert first.to_json() == second.to_json()


def test_report_summary():
    report = InequalityReport([InequalityEntry(T_BOUND, (2, 1), 0, 1, 0.5, 0.25), InequalityEntry(S1_BOUND, (1,), 0, 2, 0.0, 1.0)])
    assert not report.holds()
    assert report.max_violation() == pytest.approx(0.25)
    assert report.worst().subset == (1, 2)
    assert report.to_json()["min_slack"] == {T_BOUND: -0.25, S1_BOUND: 1.0}


def test_empty_report_holds():
    report = InequalityReport([])
    assert report.holds()
    assert report.worst() is None
