import logging

from backend.core.EnumerationLimitError import EnumerationLimitError
from backend.core.FunctionSpecError import FunctionSpecError
from backend.ordering.DPState import DPState

MAX_DP_NODES = 24
ARGMIN_TOLERANCE = 1e-12

logger = logging.getLogger("colloq.ordering")


def within_argmin(value, best):
    """Whether `value` ties the minimum `best` under the relative argmin tolerance."""
    return value <= best + ARGMIN_TOLERANCE * max(1.0, abs(best))


class DPTable:
    """Memoized optimal expected cost of every ordering state.

        C(R, t) = min_i f(p_i) + p_i * C(R - i, t - 1) + (1 - p_i) * C(R - i, t)

    with C = 0 on terminal states. States are filled on demand, so any
    subset state can be queried after the root is solved.
    """

    def __init__(self, profile, theta, cost):
        if profile.n() > MAX_DP_NODES:
            raise EnumerationLimitError("Ordering DP is capped at %d nodes, got %d." % (MAX_DP_NODES, profile.n()))
        if not 1 <= theta <= profile.n():
            raise FunctionSpecError("Threshold %r is outside 1..%d." % (theta, profile.n()))
        self._profile = profile
        self._theta = theta
        self._cost = cost
        self._node_costs = {node: cost(profile.prob(node)) for node in profile.nodes()}
        self._memo = {}

    def profile(self):
        return self._profile

    def theta(self):
        return self._theta

    def cost_kind(self):
        return self._cost

    def node_cost(self, node):
        return self._node_costs[node]

    def root_state(self):
        return DPState.root(self._profile.n(), self._theta)

    def candidate_value(self, state, node):
        """Expected cost when `node` transmits first at `state` and play is optimal afterwards."""
        p = self._profile.prob(node)
        value = self._node_costs[node]
        if p > 0.0:
            value += p * self.value(state.after(node, 1))
        if p < 1.0:
            value += (1.0 - p) * self.value(state.after(node, 0))
        return value

    def _solve(self, state):
        if state.is_terminal():
            return 0.0, ()
        candidates = {node: self.candidate_value(state, node) for node in sorted(state.remaining())}
        best = min(candidates.values())
        argmin = tuple(node for node, value in candidates.items() if within_argmin(value, best))
        return best, argmin

    def entry(self, state):
        if state not in self._memo:
            self._memo[state] = self._solve(state)
        return self._memo[state]

    def value(self, state):
        return self.entry(state)[0]

    def argmin(self, state):
        return self.entry(state)[1]

    def root_value(self):
        return self.value(self.root_state())

    def root_argmin(self):
        return self.argmin(self.root_state())

    def states(self):
        return sorted(self._memo)

    def reachable_states(self):
        """Every non-terminal state reachable from the root under some transmission order."""
        seen = set()
        pending = [self.root_state()]
        while pending:
            state = pending.pop()
            if state in seen or state.is_terminal():
                continue
            seen.add(state)
            for node in state.remaining():
                pending.append(state.after(node, 0))
                pending.append(state.after(node, 1))
        return sorted(seen)

    def __len__(self):
        return len(self._memo)


def solve_dp(profile, theta, cost):
    """Solve the ordering DP from the root and return the filled table."""
    table = DPTable(profile, theta, cost)
    logger.info("Solving ordering DP for %r, theta=%d, cost=%s.", profile, theta, cost)
    root_value = table.root_value()
    logger.info("Ordering DP solved with %d states, root cost %f, argmin %s.", len(table), root_value, table.root_argmin())
    return table
