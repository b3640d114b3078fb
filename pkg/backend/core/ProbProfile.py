from backend.core.Arithmetic import check_probability
from backend.core.ProbabilityDomainError import ProbabilityDomainError
import backend.core.Serialization as serialization


class ProbProfile:
    """Bernoulli parameters p_1 <= p_2 <= ... <= p_n of the n nodes.

    Nodes are addressed by their 1-based rank in the sorted profile. When a
    profile is built from unsorted input, the original 1-based position of
    every node is kept so reports can name both.
    """

    def __init__(self, probs, original_ids=None):
        self._probs = tuple(check_probability(p) for p in probs)
        if not self._probs:
            raise ProbabilityDomainError("A profile needs at least one node.")
        for previous, current in zip(self._probs, self._probs[1:]):
            if current < previous:
                raise ProbabilityDomainError("Profile %s is not sorted in non-decreasing order." % (self._probs,))

        if original_ids is None:
            original_ids = range(1, len(self._probs) + 1)
        self._original_ids = tuple(int(i) for i in original_ids)
        if sorted(self._original_ids) != list(range(1, len(self._probs) + 1)):
            raise ProbabilityDomainError("Original ids %s are not a permutation of 1..%d." % (self._original_ids, len(self._probs)))

    @classmethod
    def from_unsorted(cls, probs):
        """Sort the probabilities (stable, so equal values keep input order) and remember input positions."""
        checked = [check_probability(p) for p in probs]
        order = sorted(range(len(checked)), key=lambda position: (checked[position], position))
        return cls([checked[position] for position in order], [position + 1 for position in order])

    def n(self):
        return len(self._probs)

    def probs(self):
        return self._probs

    def prob(self, node):
        """Return p_node for a 1-based node id."""
        if not 1 <= node <= len(self._probs):
            raise IndexError("Node %r is not in 1..%d." % (node, len(self._probs)))
        return self._probs[node - 1]

    def nodes(self):
        return tuple(range(1, len(self._probs) + 1))

    def original_id(self, node):
        return self._original_ids[node - 1]

    def original_ids(self):
        return self._original_ids

    def subset_probs(self, nodes):
        return tuple(self._probs[node - 1] for node in sorted(nodes))

    def rank_within(self, nodes):
        """Order a subset of node ids from least to most likely, ties by lowest id."""
        return sorted(nodes, key=lambda node: (self._probs[node - 1], node))

    def to_json(self):
        return {"probs": list(self._probs), "original_ids": list(self._original_ids)}

    @classmethod
    def from_json(cls, document):
        serialization.validate(document, "profile_schema")
        return cls(document["probs"], document.get("original_ids"))

    def __len__(self):
        return len(self._probs)

    def __hash__(self):
        return hash((self._probs, self._original_ids))

    def __eq__(self, other):
        return isinstance(other, self.__class__) and \
               (self._probs, self._original_ids) == (other.probs(), other.original_ids())

    def __repr__(self):
        return "ProbProfile(%s)" % ", ".join("%.6g" % p for p in self._probs)
