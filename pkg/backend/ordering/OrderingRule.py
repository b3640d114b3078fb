import logging

from backend.core.Arithmetic import DEFAULT_TOLERANCE
from backend.core.FunctionSpecError import FunctionSpecError
from backend.core.PolicyError import PolicyError
from backend.ordering.DPTable import solve_dp
from backend.ordering.PolicyTree import PolicyTree

logger = logging.getLogger("colloq.ordering")


def rule_choice(profile, state):
    """The (k+1)-th least likely remaining node for the residual problem Pi_{m-k}.

    Nodes are re-ranked among the remaining ones at every state; equal
    probabilities are ordered by lowest id.
    """
    ranked = profile.rank_within(state.remaining())
    return ranked[state.rank_offset()]


def rule_policy(profile, theta):
    """Policy tree of the k-th least likely rule, starting from k = n - theta."""
    if not 1 <= theta <= profile.n():
        raise FunctionSpecError("Threshold %r is outside 1..%d." % (theta, profile.n()))
    return PolicyTree.build(profile.n(), theta, lambda state: rule_choice(profile, state), "rule")


def static_policy(profile, theta, order, name="static"):
    """Policy that always lets the first remaining node of a fixed order transmit."""
    order = tuple(order)
    if sorted(order) != list(profile.nodes()):
        raise PolicyError("Order %s is not a permutation of the nodes." % (order,))

    def chooser(state):
        return next(node for node in order if node in state.remaining())

    return PolicyTree.build(profile.n(), theta, chooser, name)


def ascending_policy(profile, theta):
    return static_policy(profile, theta, profile.nodes(), "ascending")


def descending_policy(profile, theta):
    return static_policy(profile, theta, tuple(reversed(profile.nodes())), "descending")


def policy_cost(policy, profile, theta, cost):
    """Exact expected cost of a policy, by expectation over its tree."""
    if policy.n() != profile.n() or policy.theta() != theta:
        raise PolicyError("Policy %r does not match n=%d, theta=%d." % (policy, profile.n(), theta))

    memo = {}

    def expected(state):
        if state.is_terminal():
            return 0.0
        if state not in memo:
            node = policy.transmitter(state)
            if node not in state.remaining():
                raise PolicyError("Policy %r picks node %r outside state %r." % (policy, node, state))
            p = profile.prob(node)
            value = cost(p)
            if p > 0.0:
                value += p * expected(state.after(node, 1))
            if p < 1.0:
                value += (1.0 - p) * expected(state.after(node, 0))
            memo[state] = value
        return memo[state]

    return expected(policy.root_state())


class RuleCheck:
    def __init__(self, valid, counterexample=None, states_checked=0):
        self._valid = valid
        self._counterexample = counterexample
        self._states_checked = states_checked

    def valid(self):
        return self._valid

    def counterexample(self):
        """(state, rule node, argmin nodes) of the first violation, or None."""
        return self._counterexample

    def states_checked(self):
        return self._states_checked

    def __bool__(self):
        return self._valid

    def __repr__(self):
        if self._valid:
            return "RuleCheck(valid, %d states)" % self._states_checked
        return "RuleCheck(violated at %r)" % (self._counterexample,)


def verify_rule(profile, theta, cost, table=None):
    """Check that the rule's node is in the DP argmin set at every reachable state."""
    if table is None:
        table = solve_dp(profile, theta, cost)
    states = table.reachable_states()
    for state in states:
        node = rule_choice(profile, state)
        argmin = table.argmin(state)
        if node not in argmin:
            logger.warning("Rule picks node %d at %r but the DP argmin is %s for %r (%s).", node, state, argmin, profile, cost)
            return RuleCheck(False, (state, node, argmin), len(states))
    return RuleCheck(True, None, len(states))


def rule_matches_dp(profile, theta, cost, tolerance=DEFAULT_TOLERANCE):
    """Whether the rule policy's exact expected cost equals the DP optimum."""
    table = solve_dp(profile, theta, cost)
    return abs(policy_cost(rule_policy(profile, theta), profile, theta, cost) - table.root_value()) <= tolerance
