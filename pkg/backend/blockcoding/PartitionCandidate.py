import itertools
import math

from backend.core.BroadcastError import BroadcastError

FREE = None


class PartitionCandidate:
    """A partition of {0,1}^n into subcubes, each written as a pattern over {0, 1, None}.

    A None coordinate is free. Under the product measure of a profile, a
    part's probability is the product over its fixed coordinates.
    """

    def __init__(self, n, parts):
        self._n = n
        self._parts = tuple(sorted((tuple(part) for part in parts), key=_pattern_key))

    def n(self):
        return self._n

    def parts(self):
        return self._parts

    def points(self, part):
        choices = [(0, 1) if value is FREE else (value,) for value in part]
        return list(itertools.product(*choices))

    def probabilities(self, profile):
        probabilities = []
        for part in self._parts:
            probability = 1.0
            for node, value in enumerate(part, start=1):
                if value is FREE:
                    continue
                p = profile.prob(node)
                probability *= p if value == 1 else 1.0 - p
            probabilities.append(probability)
        return probabilities

    def entropy(self, profile):
        return -math.fsum(q * math.log2(q) for q in self.probabilities(profile) if q > 0.0)

    def validate(self, spec, fooling_columns):
        """Check disjoint cover, monochromatic parts and at most one fooling column per part."""
        covered = set()
        fooling = {tuple(column) for column in fooling_columns}
        for part in self._parts:
            points = self.points(part)
            if covered.intersection(points):
                raise BroadcastError("Part %s overlaps another part." % (part,))
            covered.update(points)
            if len({spec.evaluate(point) for point in points}) != 1:
                raise BroadcastError("Part %s is not monochromatic." % (part,))
            if len(fooling.intersection(points)) > 1:
                raise BroadcastError("Part %s holds more than one fooling column." % (part,))
        if len(covered) != 2 ** self._n:
            raise BroadcastError("Parts cover %d of %d points." % (len(covered), 2 ** self._n))
        return True

    def to_json(self):
        return {"n": self._n, "parts": ["".join("*" if value is FREE else str(value) for value in part) for part in self._parts]}

    def __eq__(self, other):
        return isinstance(other, self.__class__) and self._parts == other.parts()

    def __hash__(self):
        return hash(self._parts)

    def __repr__(self):
        return "{" + ", ".join("".join("*" if value is FREE else str(value) for value in part) for part in self._parts) + "}"


def _pattern_key(part):
    return tuple(2 if value is FREE else value for value in part)
