import logging

import numpy as np

from backend.blockcoding.ComputationTree import ComputationTree
from backend.blockcoding.HuffmanCoder import CHUNK_LENGTH, code_subblock
from backend.core.FunctionSpecError import FunctionSpecError
from backend.core.Randomness import make_rng, sample_measurements
from backend.ordering.OrderingRule import rule_policy
import backend.core.Serialization as serialization

logger = logging.getLogger("colloq.blockcoding")


class BlockTransmission:
    def __init__(self, path, transmitter, subblock_length, ones, bits):
        self.path = path
        self.transmitter = transmitter
        self.subblock_length = subblock_length
        self.ones = ones
        self.bits = bits

    def to_json(self):
        return {"path": self.path, "transmitter": self.transmitter, "subblock_length": self.subblock_length,
                "ones": self.ones, "bits": self.bits}


class BlockRun:
    """Outcome of one simulated block: the transmissions in traversal order and the totals."""

    def __init__(self, profile, theta, block_length, seed, transmissions, zero_error):
        self._profile = profile
        self._theta = theta
        self._block_length = block_length
        self._seed = seed
        self._transmissions = list(transmissions)
        self._zero_error = zero_error

    def profile(self):
        return self._profile

    def theta(self):
        return self._theta

    def block_length(self):
        return self._block_length

    def seed(self):
        return self._seed

    def transmissions(self):
        return self._transmissions

    def zero_error(self):
        return self._zero_error

    def total_bits(self):
        return sum(transmission.bits for transmission in self._transmissions)

    def bits_per_instance(self):
        return self.total_bits() / self._block_length

    def table_rows(self):
        return [[t.path, t.transmitter, self._profile.original_id(t.transmitter), t.subblock_length, t.ones, t.bits]
                for t in self._transmissions]

    def to_json(self):
        return serialization.versioned({
            "profile": self._profile.to_json(),
            "theta": self._theta,
            "block_length": self._block_length,
            "seed": self._seed,
            "total_bits": self.total_bits(),
            "bits_per_instance": self.bits_per_instance(),
            "zero_error": self._zero_error,
            "transmissions": [transmission.to_json() for transmission in self._transmissions]
        })


def simulate_block(profile, theta, block_length, seed, chunk_length=CHUNK_LENGTH):
    """Simulate coherent block computation on `block_length` sampled instances.

    The tree is walked depth first, bit-0 subblock first. Each announcing
    node Huffman-codes its current subblock, every receiver decodes it, and
    at the leaves the decoded function block is compared with the truth.
    """
    if block_length < 1:
        raise FunctionSpecError("Block length must be at least 1, got %r." % (block_length,))
    tree = ComputationTree(profile, rule_policy(profile, theta))
    rng = make_rng(seed)
    measurements = sample_measurements(rng, profile.probs(), block_length)
    truth = measurements.sum(axis=1) >= theta

    decided = np.full(block_length, -1, dtype=np.int8)
    transmissions = []
    streams_ok = True

    pending = [(tree.root(), np.arange(block_length))]
    while pending:
        node, instances = pending.pop()
        if node.is_leaf():
            decided[instances] = node.value()
            continue
        path = "".join(str(bit) for bit in node.path())
        if instances.size == 0:
            transmissions.append(BlockTransmission(path, node.transmitter(), 0, 0, 0))
            pending.append((node.child(1), instances))
            pending.append((node.child(0), instances))
            continue

        symbols = measurements[instances, node.transmitter() - 1]
        code = code_subblock(symbols, chunk_length)
        streams_ok = streams_ok and code.stream_ok
        transmissions.append(BlockTransmission(path, node.transmitter(), code.length, code.ones, code.bits))
        logger.debug("Node %d codes subblock `%s` of %d instances in %d bits.", node.transmitter(), path, code.length, code.bits)

        pending.append((node.child(1), instances[symbols == 1]))
        pending.append((node.child(0), instances[symbols == 0]))

    zero_error = bool(streams_ok and np.all(decided >= 0) and np.array_equal(decided == 1, truth))
    run = BlockRun(profile, theta, block_length, seed, transmissions, zero_error)
    logger.info("Block simulation for %r, theta=%d, N=%d, seed=%s: %f bits per instance, zero error %s.",
                profile, theta, block_length, seed, run.bits_per_instance(), zero_error)
    return run
