from backend.core.BroadcastCosts import get_cost
from backend.ordering.DPTable import solve_dp
from backend.ordering.OrderingRule import ascending_policy, descending_policy, policy_cost, rule_policy, verify_rule
from backend.ordering.PulseMapping import profile_pulse_mappings
import backend.core.Serialization as serialization
from interfaces.cmd.Runner import RunReport, Runner


class OrderRunner(Runner):
    """Optimal transmission order of a threshold function under a per-broadcast cost."""

    def execute(self):
        profile = self._config.profile()
        theta = self._config.require("theta")
        cost = get_cost(self._config.get("cost"))

        table = solve_dp(profile, theta, cost)
        policy = rule_policy(profile, theta)
        expected_cost = policy_cost(policy, profile, theta, cost)

        document = serialization.versioned(policy.to_json())
        document["cost"] = cost.name()
        document["expected_cost"] = expected_cost
        document["profile"] = profile.to_json()
        if cost.name() == "pulse":
            mappings = profile_pulse_mappings(profile)
            document["pulse_mappings"] = [dict(mappings[node].to_json(), node=node, original_id=profile.original_id(node))
                                          for node in profile.nodes()]

        headers = ["remaining", "residual", "transmitter", "original_id", "p", "dp_value", "dp_argmin", "rule_optimal"]
        rows = []
        for state in policy.states():
            node = policy.transmitter(state)
            argmin = table.argmin(state)
            rows.append([sorted(state.remaining()), state.residual(), node, profile.original_id(node),
                         profile.prob(node), table.value(state), list(argmin), node in argmin])

        summary = [
            ("Optimal expected cost", table.root_value()),
            ("Rule policy cost", expected_cost),
            ("Ascending order cost", policy_cost(ascending_policy(profile, theta), profile, theta, cost)),
            ("Descending order cost", policy_cost(descending_policy(profile, theta), profile, theta, cost))
        ]

        passed = True
        if self._config.get("verify"):
            check = verify_rule(profile, theta, cost, table)
            summary.append(("Rule in argmin at every reachable state", check.valid()))
            summary.append(("Reachable states checked", check.states_checked()))
            passed = check.valid()

        emit_path = self._config.get("emit")
        if emit_path:
            self.write_json(document, emit_path, "policy_schema")

        return RunReport(document, "policy_schema", headers, rows,
                         title="Policy for theta=%d, cost=%s" % (theta, cost.name()), summary=summary, passed=passed)
