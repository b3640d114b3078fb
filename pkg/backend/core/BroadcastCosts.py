import numpy as np

from backend.core.Arithmetic import binary_entropy, check_probability
from backend.core.BroadcastCost import BroadcastCost
from backend.core.FunctionSpecError import FunctionSpecError


class UnitCost(BroadcastCost):
    def name(self) -> str:
        return "unit"

    def cost(self, p: float) -> float:
        """Return one bit for every transmission regardless of p."""
        check_probability(p)
        return 1.0


class BinaryEntropyCost(BroadcastCost):
    def name(self) -> str:
        return "entropy"

    def cost(self, p: float) -> float:
        """Return H(p), the amortized per-instance cost of coding a Bernoulli(p) block."""
        return binary_entropy(p)


class PulseMinCost(BroadcastCost):
    def name(self) -> str:
        return "pulse"

    def cost(self, p: float) -> float:
        """Return min(p, 1 - p), the expected energy when the pulse marks the rarer value."""
        p = check_probability(p)
        return min(p, 1.0 - p)


COST_KINDS = {
    "unit": UnitCost,
    "entropy": BinaryEntropyCost,
    "pulse": PulseMinCost
}


def get_cost(cost_name):
    if cost_name not in COST_KINDS:
        raise FunctionSpecError("Unknown cost `%s`, expected one of %s." % (cost_name, ", ".join(sorted(COST_KINDS))))
    return COST_KINDS[cost_name]()


def check_cost_hypotheses(cost, points=2001, tolerance=1e-12):
    """Check on a grid that f(p) = f(1 - p) and that f(p)/p is non-increasing on (0, 1].

    Returns a (symmetric, ratio_non_increasing) pair of booleans.
    """
    grid = np.linspace(0.0, 1.0, points)
    values = np.array([cost(p) for p in grid])
    mirrored = np.array([cost(1.0 - p) for p in grid])
    symmetric = bool(np.all(np.abs(values - mirrored) <= tolerance))

    ratios = values[1:] / grid[1:]
    non_increasing = bool(np.all(np.diff(ratios) <= tolerance * np.maximum(1.0, np.abs(ratios[:-1]))))
    return symmetric, non_increasing
