import logging

import numpy as np
from scipy.stats import binom as binomial_distribution

from backend.avgcase.DiscardRun import DiscardRun
from backend.avgcase.RSeries import r_value
from backend.blockcoding.HuffmanCoder import code_subblock
from backend.core.Arithmetic import binary_entropy
from backend.core.FunctionSpecError import FunctionSpecError
from backend.core.ProbabilityDomainError import ProbabilityDomainError
from backend.core.Randomness import make_rng
import backend.core.Serialization as serialization

logger = logging.getLogger("colloq.avgcase")


class AnalyticCost:
    def __init__(self, n, theta, p, block_length):
        self._n = n
        self._theta = theta
        self._p = p
        self._block_length = block_length
        self._entropy = binary_entropy(p)
        self._r = r_value(n, theta, p)

    def r(self):
        return self._r

    def total_bits(self):
        """theta * N * H(p) + N * H(p) * R."""
        return self._theta * self._block_length * self._entropy + self._block_length * self._entropy * self._r

    def rate(self):
        return self.total_bits() / self._block_length

    def bound(self):
        """theta * H(p) / p, independent of n."""
        return self._theta * self._entropy / self._p

    def to_json(self):
        return serialization.versioned({
            "n": self._n, "theta": self._theta, "p": self._p, "block_length": self._block_length,
            "total_bits": self.total_bits(), "rate": self.rate(), "r": self._r, "bound": self.bound()
        })

    def __repr__(self):
        return "AnalyticCost(rate=%.6f, bound=%.6f)" % (self.rate(), self.bound())


def _check(n, theta, p):
    if not 0.0 < p < 1.0:
        raise ProbabilityDomainError("p must lie strictly between 0 and 1, got %r." % (p,))
    if not 1 <= theta <= n:
        raise FunctionSpecError("Threshold %r is outside 1..%d." % (theta, n))


def analytic_cost(n, theta, p, block_length):
    """Expected bits of the discard strategy on a block of i.i.d. Bernoulli(p) instances."""
    _check(n, theta, p)
    return AnalyticCost(n, theta, p, block_length)


def binomial_tail_rate(n, theta, p):
    """Per-instance rate from the binomial tail: sum_i P(fewer than theta ones in i draws) * H(p)."""
    _check(n, theta, p)
    draws = np.arange(n)
    return float(np.sum(binomial_distribution.cdf(theta - 1, draws, p)) * binary_entropy(p))


def parallel_schemes_rate(n, theta_one, theta_two, p):
    """Rate of running the schemes for two thresholds side by side; at most (theta_one + theta_two) H(p) / p."""
    return analytic_cost(n, theta_one, p, 1).rate() + analytic_cost(n, theta_two, p, 1).rate()


def simulate_discard(n, theta, p, block_length, seed, mode=DiscardRun.IDEAL):
    """Simulate the discard strategy: nodes n, ..., 1 transmit in turn, each coding only
    the instances that have heard fewer than theta ones so far.

    In ideal mode a coded instance costs H(p); in huffman mode each node
    Huffman-codes its undetermined subblock and the receivers decode it.
    """
    if not 0.0 <= p <= 1.0:
        raise ProbabilityDomainError("p must lie in [0, 1], got %r." % (p,))
    if not 1 <= theta <= n:
        raise FunctionSpecError("Threshold %r is outside 1..%d." % (theta, n))
    if mode not in (DiscardRun.IDEAL, DiscardRun.HUFFMAN):
        raise FunctionSpecError("Unknown discard mode `%s`." % mode)

    rng = make_rng(seed)
    measurements = (rng.random((block_length, n)) < p).astype(np.uint8)
    ones_heard = np.zeros(block_length, dtype=np.int64)
    entropy = binary_entropy(p)

    transmitters = []
    undetermined = []
    node_bits = []
    streams_ok = True
    for node in range(n, 0, -1):
        active = ones_heard < theta
        column = measurements[active, node - 1]
        transmitters.append(node)
        undetermined.append(int(active.sum()))
        if mode == DiscardRun.IDEAL:
            node_bits.append(int(active.sum()) * entropy)
        else:
            code = code_subblock(column)
            streams_ok = streams_ok and code.stream_ok
            node_bits.append(code.bits)
        ones_heard[active] += column

    decided = ones_heard >= theta
    truth = measurements.sum(axis=1) >= theta
    run = DiscardRun(n, theta, p, block_length, seed, mode, transmitters, undetermined, node_bits,
                     bool(streams_ok and np.array_equal(decided, truth)))
    logger.info("Discard simulation %r.", run)
    return run
