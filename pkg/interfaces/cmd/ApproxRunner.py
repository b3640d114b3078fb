from backend.approx.BudgetDPTable import budget_dp
from backend.approx.ParityPlan import MAX_PARITY_NODES, parity_best_subset, parity_bruteforce
from backend.core.Arithmetic import DEFAULT_TOLERANCE, binary_entropy
from interfaces.cmd.Runner import RunReport, Runner


class ApproxRunner(Runner):
    """Threshold (`approx`) and parity (`parity`) computation with a limited number of broadcasts."""

    def execute(self):
        if self._config.subcommand() == "parity":
            return self.parity()
        return self.approx()

    def approx(self):
        profile = self._config.profile()
        theta = self._config.require("theta")
        table = budget_dp(profile, theta, self._config.require("budget"), self._config.get("metric"))

        argmin = table.root_argmin()
        rows = [[node, profile.original_id(node), profile.prob(node), value, node in argmin]
                for node, value in sorted(table.root_candidates().items())]
        summary = [("Optimal value", table.root_value()), ("Best first transmitters", list(argmin)), ("States", len(table))]
        return RunReport(table.to_json(), "budget_table_schema", ["node", "original_id", "p", "value", "optimal"], rows,
                         title="Budget %d, theta=%d, %s metric" % (table.budget(), theta, table.metric()),
                         summary=summary)

    def parity(self):
        profile = self._config.profile()
        plan = parity_best_subset(profile, self._config.require("budget"))
        document = plan.to_json()
        chosen = set(plan.subset())
        rows = [[node, profile.original_id(node), profile.prob(node), binary_entropy(profile.prob(node)), node in chosen]
                for node in profile.nodes()]
        summary = [("Residual parity entropy", plan.residual_entropy())]

        passed = True
        if profile.n() <= MAX_PARITY_NODES:
            exhaustive = parity_bruteforce(profile, plan.budget())
            document["exhaustive_entropy"] = exhaustive.residual_entropy()
            passed = plan.residual_entropy() <= exhaustive.residual_entropy() + DEFAULT_TOLERANCE
            summary.append(("Exhaustive minimum", exhaustive.residual_entropy()))
        return RunReport(document, "parity_plan_schema", ["node", "original_id", "p", "entropy", "transmits"], rows,
                         title="Parity with %d broadcasts" % plan.budget(), summary=summary, passed=passed)
