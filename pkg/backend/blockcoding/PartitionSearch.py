import functools
import itertools
import logging

from backend.blockcoding.ComputationTree import coherent_cost
from backend.blockcoding.PartitionCandidate import FREE, PartitionCandidate
from backend.core.EnumerationLimitError import EnumerationLimitError
from backend.core.FunctionSpec import FunctionSpec
from backend.core.FunctionSpecError import FunctionSpecError
from backend.core.ProbProfile import ProbProfile
import backend.core.Serialization as serialization

MAX_PARTITION_NODES = 3
CONJECTURE_TOLERANCE = 1e-6
GRIDS = {
    "coarse": (0.1, 0.3, 0.5, 0.7, 0.9),
    "fine": tuple(round(0.05 * step, 2) for step in range(1, 20))
}

logger = logging.getLogger("colloq.blockcoding")


def _fooling_points(n, theta):
    return {point for point in itertools.product((0, 1), repeat=n) if sum(point) in (theta - 1, theta)}


@functools.lru_cache(maxsize=None)
def admissible_partitions(n, theta):
    """Every subcube partition of {0,1}^n whose parts are monochromatic for Pi_theta
    and hold at most one column of weight theta - 1 or theta.

    Parts are chosen for the smallest uncovered point first, so each
    partition is produced once.
    """
    if n > MAX_PARTITION_NODES:
        raise EnumerationLimitError("Partition search is limited to n <= %d, got n=%d." % (MAX_PARTITION_NODES, n))
    if not 1 <= theta <= n:
        raise FunctionSpecError("Threshold %r is outside 1..%d." % (theta, n))

    spec = FunctionSpec.threshold(n, theta)
    fooling = _fooling_points(n, theta)
    cubes = []
    for pattern in itertools.product((0, 1, FREE), repeat=n):
        points = frozenset(itertools.product(*[(0, 1) if value is FREE else (value,) for value in pattern]))
        if len({spec.evaluate(point) for point in points}) != 1:
            continue
        if len(points & fooling) > 1:
            continue
        cubes.append((pattern, points))

    every_point = sorted(itertools.product((0, 1), repeat=n))
    partitions = []

    def search(covered, chosen):
        uncovered = next((point for point in every_point if point not in covered), None)
        if uncovered is None:
            partitions.append(PartitionCandidate(n, chosen))
            return
        for pattern, points in cubes:
            if uncovered in points and not (points & covered):
                search(covered | points, chosen + [pattern])

    search(frozenset(), [])
    logger.info("Found %d admissible partitions for n=%d, theta=%d.", len(partitions), n, theta)
    return tuple(partitions)


def best_partition(profile, theta):
    """The admissible partition of least entropy under the profile's product measure."""
    partitions = admissible_partitions(profile.n(), theta)
    return min(partitions, key=lambda partition: partition.entropy(profile))


def partition_lower_bound(profile, theta):
    """Least partition entropy over admissible partitions; a lower bound on per-instance bits."""
    if profile.n() > MAX_PARTITION_NODES:
        raise EnumerationLimitError("Partition search is limited to n <= %d, got n=%d." % (MAX_PARTITION_NODES, profile.n()))
    return best_partition(profile, theta).entropy(profile)


class ConjectureReport:
    def __init__(self, rows, tolerance=CONJECTURE_TOLERANCE):
        self._rows = list(rows)
        self._tolerance = tolerance

    def rows(self):
        """(theta, probs, lower, upper) tuples."""
        return self._rows

    def max_gap(self):
        return max((abs(upper - lower) for _, _, lower, upper in self._rows), default=0.0)

    def holds(self):
        return self.max_gap() <= self._tolerance

    def table_rows(self):
        return [[theta, ", ".join("%.2f" % p for p in probs), lower, upper, upper - lower]
                for theta, probs, lower, upper in self._rows]

    def to_json(self):
        return serialization.versioned({
            "check": "conjecture",
            "passed": self.holds(),
            "max_gap": self.max_gap(),
            "cases": len(self._rows),
            "rows": [{"theta": theta, "probs": list(probs), "partition_bound": lower, "coherent_cost": upper}
                     for theta, probs, lower, upper in self._rows]
        })


def conjecture_check(thetas=(1, 2, 3), grid="coarse", profiles=None):
    """Compare the partition lower bound with the coherent cost on sorted 3-node profiles."""
    if profiles is None:
        values = GRIDS[grid] if isinstance(grid, str) else tuple(grid)
        profiles = [ProbProfile(probs) for probs in itertools.combinations_with_replacement(sorted(values), 3)]

    rows = []
    for theta in thetas:
        for profile in profiles:
            lower = partition_lower_bound(profile, theta)
            upper, _ = coherent_cost(profile, theta)
            rows.append((theta, profile.probs(), lower, upper))
    report = ConjectureReport(rows)
    logger.info("Partition bound matches coherent cost within %g on %d cases: %s.", report.max_gap(), len(rows), report.holds())
    return report
