import logging

import numpy as np

from backend.core.Arithmetic import binary_entropy, check_probability
from backend.core.EnumerationLimitError import EnumerationLimitError
from backend.core.FunctionSpecError import FunctionSpecError
from backend.core.ProbProfile import ProbProfile
from backend.ordering.DPTable import within_argmin
import backend.core.Serialization as serialization

MAX_BUDGET_NODES = 20

(ERROR_METRIC, ENTROPY_METRIC) = ("error", "entropy")
METRICS = (ERROR_METRIC, ENTROPY_METRIC)

logger = logging.getLogger("colloq.approx")


def poisson_binomial_pmf(probs):
    """PMF of the number of ones among independent Bernoulli(p_i) variables."""
    pmf = np.array([1.0])
    for p in probs:
        following = np.zeros(len(pmf) + 1)
        following[:-1] = pmf * (1.0 - p)
        following[1:] += pmf * p
        pmf = following
    return pmf


def residual_prob(probs, residual):
    """P(sum of the Bernoulli variables >= residual); 1 when residual <= 0, 0 past the subset size."""
    probs = [check_probability(p) for p in probs]
    if residual <= 0:
        return 1.0
    if residual > len(probs):
        return 0.0
    return float(min(1.0, max(0.0, poisson_binomial_pmf(probs)[residual:].sum())))


class BudgetDPTable:
    """Least expected error metric of Pi_theta after at most `budget` broadcast bits.

    States are (remaining nodes, ones still needed, bits left). With no bits
    left the estimate is the likelier value of the residual function, whose
    probability of being 1 is q: the error metric is min(q, 1 - q) and the
    entropy metric H(q). Decided states are worth 0.
    """

    def __init__(self, profile, theta, budget, metric):
        if profile.n() > MAX_BUDGET_NODES:
            raise EnumerationLimitError("Budget DP is capped at %d nodes, got %d." % (MAX_BUDGET_NODES, profile.n()))
        if not 1 <= theta <= profile.n():
            raise FunctionSpecError("Threshold %r is outside 1..%d." % (theta, profile.n()))
        if not 0 <= budget <= profile.n():
            raise FunctionSpecError("Budget %r is outside 0..%d." % (budget, profile.n()))
        if metric not in METRICS:
            raise FunctionSpecError("Unknown metric `%s`, expected one of %s." % (metric, ", ".join(METRICS)))
        self._profile = profile
        self._theta = theta
        self._budget = budget
        self._metric = metric
        self._memo = {}

    def profile(self):
        return self._profile

    def theta(self):
        return self._theta

    def budget(self):
        return self._budget

    def metric(self):
        return self._metric

    def root_key(self):
        return frozenset(self._profile.nodes()), self._theta, self._budget

    def boundary(self, remaining, residual):
        q = residual_prob(self._profile.subset_probs(remaining), residual)
        if self._metric == ERROR_METRIC:
            return min(q, 1.0 - q)
        return binary_entropy(q)

    def _solve(self, remaining, residual, budget):
        if residual == 0 or residual > len(remaining):
            return 0.0, {}, ()
        if budget == 0:
            return self.boundary(remaining, residual), {}, ()

        candidates = {}
        for node in sorted(remaining):
            p = self._profile.prob(node)
            rest = remaining - {node}
            value = 0.0
            if p > 0.0:
                value += p * self.value(rest, residual - 1, budget - 1)
            if p < 1.0:
                value += (1.0 - p) * self.value(rest, residual, budget - 1)
            candidates[node] = value
        best = min(candidates.values())
        argmin = tuple(node for node, value in candidates.items() if within_argmin(value, best))
        return best, candidates, argmin

    def entry(self, remaining, residual, budget):
        key = (frozenset(remaining), residual, budget)
        if key not in self._memo:
            self._memo[key] = self._solve(*key)
        return self._memo[key]

    def value(self, remaining, residual, budget):
        return self.entry(remaining, residual, budget)[0]

    def candidates(self, remaining, residual, budget):
        """Value of letting each remaining node transmit first, then playing optimally."""
        return dict(self.entry(remaining, residual, budget)[1])

    def argmin(self, remaining, residual, budget):
        return self.entry(remaining, residual, budget)[2]

    def root_value(self):
        return self.value(*self.root_key())

    def root_candidates(self):
        return self.candidates(*self.root_key())

    def root_argmin(self):
        return self.argmin(*self.root_key())

    def __len__(self):
        return len(self._memo)

    def to_json(self):
        return serialization.versioned({
            "profile": self._profile.to_json(),
            "theta": self._theta,
            "budget": self._budget,
            "metric": self._metric,
            "value": self.root_value(),
            "argmin": list(self.root_argmin()),
            "candidates": [{"node": node, "original_id": self._profile.original_id(node), "value": value}
                           for node, value in sorted(self.root_candidates().items())]
        })


def budget_dp(profile, theta, budget, metric):
    table = BudgetDPTable(profile, theta, budget, metric)
    value = table.root_value()
    logger.info("Budget DP for %r, theta=%d, budget=%d, metric=%s: value %f, argmin %s.",
                profile, theta, budget, metric, value, table.root_argmin())
    return table


# Pi_2 over three nodes with one broadcast: (probabilities, metric, value of each first transmitter to 4 decimals).
# The node-2 entropy reference is 0.82 H(0.048) + 0.18 H(0.588) = 0.4038; the published table prints 0.4991.
COUNTEREXAMPLE_CASES = (
    ((0.7, 0.82, 0.84), ENTROPY_METRIC, (0.4002, 0.4038, 0.4121)),
    ((0.6, 0.72, 0.84), ERROR_METRIC, (0.1850, 0.1850, 0.1632)),
)
COUNTEREXAMPLE_TOLERANCE = 5e-4


def counterexample_rows():
    """Rows (metric, probabilities, node, value, reference, delta, optimal) showing that
    the most likely undecided node is not always the best single transmitter."""
    rows = []
    for probs, metric, references in COUNTEREXAMPLE_CASES:
        table = budget_dp(ProbProfile(probs), 2, 1, metric)
        candidates = table.root_candidates()
        argmin = table.root_argmin()
        for node, reference in zip(sorted(candidates), references):
            value = candidates[node]
            rows.append((metric, probs, node, value, reference, value - reference, node in argmin))
    return rows
