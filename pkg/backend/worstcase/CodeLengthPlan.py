import logging
import math

from backend.core.Arithmetic import binom, log2
from backend.core.EnumerationLimitError import EnumerationLimitError
from backend.core.FunctionSpec import FunctionSpec
from backend.core.FunctionSpecError import FunctionSpecError
from backend.worstcase.GenPoly import GenPoly

MAX_WEIGHT_VECTORS = 2 ** 20

logger = logging.getLogger("colloq.worstcase")


def compositions(total, parts):
    """Yield every tuple of `parts` non-negative integers summing to `total`."""
    if parts == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for tail in compositions(total - head, parts - 1):
            yield (head,) + tail


def multinomial(weights):
    result = 1
    remaining = sum(weights)
    for w in weights:
        result *= math.comb(remaining, w)
        remaining -= w
    return result


class CodeLengthPlan:
    """Idealized codeword lengths for the block announced by the first transmitting node.

    Node n's symbols are grouped into reduced symbols; reduced symbol k carries
    the residual count c_k, the number of fooling columns left once node n is
    known to hold k. A block with w_k occurrences of symbol k gets length
        l(w) = N * log2(sum_k c_k) - sum_k w_k * log2(c_k),
    so the Kraft sum is exactly 1 and the length plus the residual cost
    sum_k w_k * log2(c_k) is the same for every block.
    """

    def __init__(self, block_length, symbol_labels, residual_counts):
        if block_length < 1:
            raise FunctionSpecError("Block length must be at least 1, got %r." % (block_length,))
        if len(symbol_labels) != len(residual_counts) or any(c < 1 for c in residual_counts):
            raise FunctionSpecError("Every reduced symbol needs a positive residual count.")
        self._block_length = block_length
        self._labels = tuple(symbol_labels)
        self._counts = tuple(residual_counts)
        self._total = sum(residual_counts)

    def block_length(self):
        return self._block_length

    def symbol_labels(self):
        return self._labels

    def residual_counts(self):
        return self._counts

    def total_count(self):
        return self._total

    def _check_weights(self, weights):
        if len(weights) != len(self._counts) or sum(weights) != self._block_length or min(weights) < 0:
            raise FunctionSpecError("Weights %s do not describe a block of length %d." % (weights, self._block_length))

    def length(self, weights):
        """Idealized codeword length l(w) in bits."""
        self._check_weights(weights)
        return self._block_length * log2(self._total) - sum(w * log2(c) for w, c in zip(weights, self._counts))

    def integer_length(self, weights):
        return math.ceil(self.length(weights) - 1e-12)

    def residual_bits(self, weights):
        """Bits the remaining nodes spend once the block of node n is known."""
        self._check_weights(weights)
        return sum(w * log2(c) for w, c in zip(weights, self._counts))

    def total_bits(self, weights):
        return self.length(weights) + self.residual_bits(weights)

    def weight_vectors(self):
        vector_count = binom(self._block_length + len(self._counts) - 1, len(self._counts) - 1)
        if vector_count > MAX_WEIGHT_VECTORS:
            raise EnumerationLimitError("Plan has %d weight vectors, the cap is %d." % (vector_count, MAX_WEIGHT_VECTORS))
        return compositions(self._block_length, len(self._counts))

    def kraft_sum(self):
        """Sum of 2^-l over every block, grouping blocks by their symbol counts."""
        return math.fsum(2.0 ** (log2(multinomial(w)) - self.length(w)) for w in self.weight_vectors())

    def integer_kraft_sum(self):
        return math.fsum(2.0 ** (log2(multinomial(w)) - self.integer_length(w)) for w in self.weight_vectors())

    def max_length(self):
        return max(self.length(w) for w in self.weight_vectors())

    def worst_case_total(self):
        return max(self.total_bits(w) for w in self.weight_vectors())

    def integer_worst_case_total(self):
        return max(self.integer_length(w) + self.residual_bits(w) for w in self.weight_vectors())

    def to_json(self):
        return {
            "block_length": self._block_length,
            "symbols": [{"label": label, "residual_count": str(count)} for label, count in zip(self._labels, self._counts)],
            "kraft_sum": self.kraft_sum(),
            "worst_case_total_bits": self.worst_case_total(),
            "integer_kraft_sum": self.integer_kraft_sum(),
            "integer_worst_case_total_bits": self.integer_worst_case_total()
        }


def kraft_plan(spec, block_length):
    """Build the code-length plan of the first transmitting node (node n) for a threshold function.

    Boolean thresholds give the two reduced symbols 0 and 1 with residual
    counts binom(n, theta) and binom(n, theta - 1). General thresholds merge
    the values of node n that leave the function already decided into the
    nearest undecided class.
    """
    if spec.kind() not in (FunctionSpec.THRESHOLD, FunctionSpec.GENERAL_THRESHOLD):
        raise FunctionSpecError("Kraft plans are defined for threshold functions, got %s." % spec)

    theta = spec.theta()
    alphabet = spec.alphabet()
    others = GenPoly(alphabet[:-1])
    last_alphabet = alphabet[-1]

    lowest = max(0, theta - 1 - others.degree())
    highest = min(last_alphabet, theta)
    labels = []
    counts = []
    for k in range(lowest, highest + 1):
        if lowest == highest:
            label = "%d..%d" % (0, last_alphabet)
        elif k == lowest and lowest > 0:
            label = "0..%d" % k
        elif k == highest and highest < last_alphabet:
            label = "%d..%d" % (k, last_alphabet)
        else:
            label = str(k)
        labels.append(label)
        counts.append(others.threshold_count(theta - k))

    plan = CodeLengthPlan(block_length, labels, counts)
    logger.info("Kraft plan for %s over N=%d uses residual counts %s.", spec, block_length, counts)
    return plan
