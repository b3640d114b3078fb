import math

from backend.approx.BudgetDPTable import COUNTEREXAMPLE_TOLERANCE, counterexample_rows
from backend.approx.ParityPlan import parity_best_subset, parity_bruteforce, parity_dp
from backend.avgcase.AverageCase import analytic_cost, binomial_tail_rate, simulate_discard
from backend.avgcase.RSeries import RSeries, r_value_recursive
from backend.avgcase.TaylorLemma import MAX_TAYLOR_THETA, check_taylor_lemma, default_grid
from backend.blockcoding.PartitionSearch import conjecture_check
from backend.core.Arithmetic import DEFAULT_TOLERANCE, binom, log2, within_tolerance
from backend.core.BroadcastCosts import COST_KINDS, get_cost
from backend.core.FunctionSpec import FunctionSpec
from backend.core.FunctionSpecError import FunctionSpecError
from backend.core.ProbProfile import ProbProfile
from backend.core.Randomness import make_rng, random_sorted_probs
from backend.ordering.InequalityReport import check_appendix_inequalities
from backend.ordering.OrderingRule import verify_rule
from backend.worstcase.CodeLengthPlan import kraft_plan
from backend.worstcase.FoolingSets import gen_threshold_fooling_count, max_fooling_set
from backend.worstcase.WorstCaseComplexity import (complexity, interval_counts, interval_recursion_count,
                                                   interval_residual_ratio, max_recursion_count)
import backend.core.Serialization as serialization
from interfaces.cmd.Runner import RunReport, Runner

SIMULATION_TOLERANCE = 0.03
KRAFT_CHECK_BLOCK_LENGTH = 8
THRESHOLD_CHECK_NODES = 8
INTERVAL_CHECK_NODES = 12
MAX_CHECK_SIZE = 10
RESIDUAL_RATIO_NODES = 40
RULE_CHECK_NODES = 8
RULE_CHECK_TRIALS = 1000


class VerifyRunner(Runner):
    """Pass/fail suites over the library's claims; exit code 1 on any failure."""

    def execute(self):
        check = self._config.require("check")
        suite = getattr(self, "suite_" + check, None)
        if suite is None:
            raise FunctionSpecError("Unknown verification suite `%s`." % check)
        self._logger.info("Running verification suite `%s`.", check)
        return suite()

    def _report(self, check, rows, failures, title, counterexample=None, **extra):
        document = serialization.versioned({
            "check": check,
            "passed": failures == 0,
            "cases": len(rows),
            "failures": failures,
            "rows": rows
        })
        if counterexample is not None:
            document["counterexample"] = counterexample
        document.update(extra)
        headers = list(rows[0]) if rows else []
        summary = [("Cases", len(rows)), ("Failures", failures), ("Passed", failures == 0)]
        if failures:
            self._logger.warning("Verification suite `%s` failed %d of %d cases.", check, failures, len(rows))
        return RunReport(document, "verify_report_schema", headers, [[row[key] for key in headers] for row in rows],
                         title=title, summary=summary, passed=failures == 0)

    def _random_profiles(self, rng, n, trials):
        return [ProbProfile(random_sorted_probs(rng, n)) for _ in range(trials)]

    def suite_rule(self):
        n_max = self._config.get("n", RULE_CHECK_NODES)
        trials = self._config.get("trials", RULE_CHECK_TRIALS)
        rng = make_rng(self._config.seed())

        rows = []
        failures = 0
        counterexample = None
        for n in range(1, n_max + 1):
            profiles = self._random_profiles(rng, n, trials)
            for cost_name in sorted(COST_KINDS):
                cost = get_cost(cost_name)
                for theta in range(1, n + 1):
                    states = 0
                    violations = 0
                    for profile in profiles:
                        check = verify_rule(profile, theta, cost)
                        states += check.states_checked()
                        if not check.valid():
                            violations += 1
                            if counterexample is None:
                                state, node, argmin = check.counterexample()
                                counterexample = {"cost": cost_name, "theta": theta, "profile": profile.to_json(),
                                                  "state": state.to_json(), "rule_choice": node, "argmin": list(argmin)}
                    rows.append({"n": n, "cost": cost_name, "theta": theta, "profiles": len(profiles), "states": states,
                                 "violations": violations})
                    failures += int(violations > 0)
            self._logger.info("Rule checked for n=%d over %d profiles.", n, trials)
        return self._report("rule", rows, failures, "Rule in DP argmin, n <= %d" % n_max, counterexample)

    def suite_inequalities(self):
        n = self._config.get("n", 5)
        trials = self._config.get("trials", 50)
        rng = make_rng(self._config.seed())
        profiles = self._random_profiles(rng, n, trials)

        rows = []
        failures = 0
        for cost_name in sorted(COST_KINDS):
            cost = get_cost(cost_name)
            checks = 0
            violations = 0
            min_slack = math.inf
            for profile in profiles:
                report = check_appendix_inequalities(profile, None, cost)
                checks += len(report.entries())
                min_slack = min(min_slack, report.min_slack())
                violations += int(not report.holds())
            rows.append({"cost": cost_name, "profiles": len(profiles), "checks": checks,
                         "min_slack": min_slack if math.isfinite(min_slack) else None, "violations": violations})
            failures += int(violations > 0)
        return self._report("inequalities", rows, failures, "Induction bounds, n=%d" % n)

    def suite_conjecture(self):
        report = conjecture_check(grid=self._config.get("grid", "coarse"))
        headers = ["theta", "probs", "partition_bound", "coherent_cost", "gap"]
        summary = [("Cases", len(report.rows())), ("Max gap", report.max_gap()), ("Passed", report.holds())]
        return RunReport(report.to_json(), "verify_report_schema", headers, report.table_rows(),
                         title="Partition bound against coherent cost, n=3", summary=summary, passed=report.holds())

    def suite_taylor(self):
        theta_max = self._config.get("theta", MAX_TAYLOR_THETA)
        if not 1 <= theta_max <= MAX_TAYLOR_THETA:
            raise FunctionSpecError("theta must lie in 1..%d, got %r." % (MAX_TAYLOR_THETA, theta_max))
        rows = []
        failures = 0
        for theta in range(1, theta_max + 1):
            error = check_taylor_lemma(theta, theta_min=theta)
            rows.append({"theta": theta, "points": len(default_grid()), "max_error": error})
            failures += int(error > DEFAULT_TOLERANCE)
        return self._report("taylor", rows, failures, "Derivative identity")

    def _fooling_specs(self, n_max):
        for n in range(1, n_max + 1):
            for theta in range(1, n + 1):
                yield FunctionSpec.threshold(n, theta)
                yield FunctionSpec.delta(n, theta)
            for a in range(1, n + 1):
                for b in range(a, n + 1):
                    yield FunctionSpec.interval(n, a, b)
            yield FunctionSpec.parity(n)
            yield FunctionSpec.uniform_max(n, 2)
            if n <= 4:
                for theta in range(1, 2 * n + 1):
                    yield FunctionSpec.general_threshold(theta, (2,) * n)

    def suite_fooling(self):
        n_max = self._config.get("n", 6)
        rows = []
        failures = 0
        for spec in self._fooling_specs(n_max):
            try:
                fooling_set = max_fooling_set(spec)
                size = fooling_set.size()
                valid = True
            except FunctionSpecError:
                self._logger.warning("Construction for %s is not a fooling set.", spec)
                size = 0
                valid = False
            lower_bits = complexity(spec).lower_bits()
            matches = valid and within_tolerance(log2(size), lower_bits)
            rows.append({"function": repr(spec), "size": size, "fooling_bits": log2(size) if size else None,
                         "lower_bits": lower_bits, "matches": matches})
            failures += int(not matches)
        return self._report("fooling", rows, failures, "Fooling sets against closed forms, n <= %d" % n_max)

    def suite_counterexample(self):
        rows = []
        failures = 0
        for metric, probs, node, value, reference, delta, optimal in counterexample_rows():
            close = abs(delta) <= COUNTEREXAMPLE_TOLERANCE
            rows.append({"metric": metric, "probs": list(probs), "node": node, "value": value,
                         "reference": reference, "delta": delta, "optimal": optimal, "close": close})
            failures += int(not close)
        return self._report("counterexample", rows, failures, "Single broadcast for Pi_2 over three nodes")

    def suite_parity(self):
        n = self._config.get("n", 10)
        trials = self._config.get("trials", 200)
        rng = make_rng(self._config.seed())

        rows = []
        failures = 0
        for budget in range(n + 1):
            mismatches = 0
            worst = 0.0
            for profile in self._random_profiles(rng, n, trials):
                greedy = parity_best_subset(profile, budget).residual_entropy()
                exhaustive = parity_bruteforce(profile, budget).residual_entropy()
                sequential = parity_dp(profile, budget)
                gap = max(abs(greedy - exhaustive), abs(sequential - exhaustive))
                worst = max(worst, gap)
                mismatches += int(gap > 1e-12)
            rows.append({"budget": budget, "profiles": trials, "max_gap": worst, "mismatches": mismatches})
            failures += int(mismatches > 0)
        return self._report("parity", rows, failures, "Greedy parity subset, n=%d" % n)

    def suite_avgcase(self):
        rows = []
        failures = 0
        grid = [k / 10 for k in range(1, 10)]
        for theta in range(1, 7):
            n_values = sorted({theta, 10, 50, 100, 200})
            for p in grid:
                series = RSeries(theta, p, n_values)
                ok = series.within_bound(DEFAULT_TOLERANCE) and series.non_decreasing()
                for n, r in series.values().items():
                    analytic = analytic_cost(n, theta, p, 1)
                    ok = ok and analytic.rate() <= analytic.bound() + DEFAULT_TOLERANCE
                    ok = ok and within_tolerance(r, r_value_recursive(n, theta, p), 1e-7)
                    ok = ok and within_tolerance(analytic.rate(), binomial_tail_rate(n, theta, p), 1e-7)
                largest = analytic_cost(n_values[-1], theta, p, 1)
                rows.append({"kind": "analytic", "theta": theta, "p": p, "rate": largest.rate(), "bound": largest.bound(), "ok": ok})
                failures += int(not ok)

        block_length = self._config.block_length(65536)
        n = self._config.get("n", 10)
        for theta in (1, 2, 3):
            for p in (0.3, 0.5):
                run = simulate_discard(n, theta, p, block_length, self._config.seed())
                analytic = analytic_cost(n, theta, p, block_length)
                ok = run.zero_error() and abs(run.rate() - analytic.rate()) <= SIMULATION_TOLERANCE * analytic.rate()
                rows.append({"kind": "simulated", "theta": theta, "p": p, "rate": run.rate(),
                             "bound": analytic.rate(), "ok": ok})
                failures += int(not ok)
        return self._report("avgcase", rows, failures, "Discard strategy rates")

    def suite_worstcase(self):
        rows = []

        interval_failures = 0
        interval_cases = 0
        for n in range(1, INTERVAL_CHECK_NODES + 1):
            for a in range(1, n + 1):
                for b in range(a, n + 1):
                    lower, upper = interval_counts(a, b, n)
                    interval_failures += int(not lower <= interval_recursion_count(a, b, n) <= upper)
                    interval_cases += 1
        rows.append({"family": "interval", "cases": interval_cases, "violations": interval_failures})

        max_failures = 0
        for n in range(1, MAX_CHECK_SIZE + 1):
            for m in range(1, MAX_CHECK_SIZE + 1):
                upper = max_recursion_count((m,) * n)
                max_failures += int(upper != binom(n + m, m) or not m * n + 1 <= upper or (m == 1 and upper != n + 1))
        rows.append({"family": "max", "cases": MAX_CHECK_SIZE ** 2, "violations": max_failures})

        ratio_failures = 0
        ratio_cases = 0
        for a in range(1, RESIDUAL_RATIO_NODES + 1):
            for b in range(a, RESIDUAL_RATIO_NODES - a + 1):
                ratios = [interval_residual_ratio(a, b, n) for n in range(a + b, RESIDUAL_RATIO_NODES + 1)]
                ratio_failures += int(any(later >= earlier for earlier, later in zip(ratios, ratios[1:])))
                ratio_cases += 1
        rows.append({"family": "interval_ratio", "cases": ratio_cases, "violations": ratio_failures})

        kraft_failures = 0
        kraft_cases = 0
        specs = [FunctionSpec.threshold(n, theta) for n in range(1, THRESHOLD_CHECK_NODES + 1) for theta in range(1, n + 1)]
        specs += [FunctionSpec.general_threshold(theta, (2, 2, 2)) for theta in range(1, 7)]
        for spec in specs:
            plan = kraft_plan(spec, KRAFT_CHECK_BLOCK_LENGTH)
            count = gen_threshold_fooling_count(spec.theta(), spec.alphabet())
            expected = KRAFT_CHECK_BLOCK_LENGTH * log2(count)
            kraft_failures += int(not (within_tolerance(plan.kraft_sum(), 1.0) and
                                       within_tolerance(plan.worst_case_total(), expected)))
            kraft_cases += 1
        rows.append({"family": "kraft", "cases": kraft_cases, "violations": kraft_failures})

        failures = sum(int(row["violations"] > 0) for row in rows)
        return self._report("worstcase", rows, failures, "Worst-case bounds")
