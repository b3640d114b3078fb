import itertools
import logging

from backend.core.Arithmetic import binary_entropy, check_probability
from backend.core.EnumerationLimitError import EnumerationLimitError
from backend.core.FunctionSpecError import FunctionSpecError
import backend.core.Serialization as serialization

MAX_PARITY_NODES = 20

logger = logging.getLogger("colloq.approx")


def parity_probability(probs):
    """P(odd number of ones), folding q <- q (1 - p) + (1 - q) p."""
    q = 0.0
    for p in probs:
        p = check_probability(p)
        q = q * (1.0 - p) + (1.0 - q) * p
    return q


def residual_parity_entropy(profile, transmitters):
    """H(parity | the transmitters' bits) = H(parity of the untouched nodes)."""
    chosen = set(transmitters)
    return binary_entropy(parity_probability(profile.prob(node) for node in profile.nodes() if node not in chosen))


class ParityPlan:
    """Nodes that broadcast within the budget and the parity's remaining entropy."""

    def __init__(self, profile, subset, residual_entropy):
        self._profile = profile
        self._subset = tuple(sorted(subset))
        self._residual_entropy = residual_entropy

    def subset(self):
        return self._subset

    def residual_entropy(self):
        return self._residual_entropy

    def budget(self):
        return len(self._subset)

    def to_json(self):
        return serialization.versioned({
            "profile": self._profile.to_json(),
            "budget": len(self._subset),
            "subset": list(self._subset),
            "original_ids": [self._profile.original_id(node) for node in self._subset],
            "residual_entropy": self._residual_entropy
        })

    def __repr__(self):
        return "ParityPlan(S=%s, residual %.6f)" % (set(self._subset) or "{}", self._residual_entropy)


def _check_budget(profile, budget):
    if not 0 <= budget <= profile.n():
        raise FunctionSpecError("Budget %r is outside 0..%d." % (budget, profile.n()))


def parity_best_subset(profile, budget):
    """Let the `budget` nodes of highest binary entropy transmit; ties go to the lowest id."""
    _check_budget(profile, budget)
    ranked = sorted(profile.nodes(), key=lambda node: (-binary_entropy(profile.prob(node)), node))
    subset = ranked[:budget]
    plan = ParityPlan(profile, subset, residual_parity_entropy(profile, subset))
    logger.info("Greedy parity plan for %r: %r.", profile, plan)
    return plan


def parity_bruteforce(profile, budget):
    """Exhaustive minimum of the residual parity entropy over all subsets of size `budget`."""
    _check_budget(profile, budget)
    if profile.n() > MAX_PARITY_NODES:
        raise EnumerationLimitError("Parity search is capped at %d nodes, got %d." % (MAX_PARITY_NODES, profile.n()))
    best = None
    for subset in itertools.combinations(profile.nodes(), budget):
        value = residual_parity_entropy(profile, subset)
        if best is None or value < best.residual_entropy():
            best = ParityPlan(profile, subset, value)
    return best


def parity_dp(profile, budget):
    """Sequential form: V(R, b) = min_i V(R - i, b - 1), V(R, 0) = H(parity over R).

    The bit value does not change the residual problem, so both branches of a
    transmission lead to the same state.
    """
    _check_budget(profile, budget)
    if profile.n() > MAX_PARITY_NODES:
        raise EnumerationLimitError("Parity DP is capped at %d nodes, got %d." % (MAX_PARITY_NODES, profile.n()))
    memo = {}

    def value(remaining, left):
        key = (remaining, left)
        if key not in memo:
            if left == 0 or not remaining:
                memo[key] = binary_entropy(parity_probability(profile.prob(node) for node in sorted(remaining)))
            else:
                memo[key] = min(value(remaining - {node}, left - 1) for node in remaining)
        return memo[key]

    return value(frozenset(profile.nodes()), budget)
