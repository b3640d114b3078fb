import backend.core.Serialization as serialization


class DiscardRun:
    """One simulated block of the discard strategy.

    `undetermined` lists, per transmission in order, how many instances the
    transmitting node still had to code.
    """
    (IDEAL, HUFFMAN) = ("ideal", "huffman")

    def __init__(self, n, theta, p, block_length, seed, mode, transmitters, undetermined, node_bits, zero_error):
        self._n = n
        self._theta = theta
        self._p = p
        self._block_length = block_length
        self._seed = seed
        self._mode = mode
        self._transmitters = tuple(transmitters)
        self._undetermined = tuple(undetermined)
        self._node_bits = tuple(node_bits)
        self._zero_error = zero_error

    def n(self):
        return self._n

    def theta(self):
        return self._theta

    def p(self):
        return self._p

    def block_length(self):
        return self._block_length

    def mode(self):
        return self._mode

    def transmitters(self):
        return self._transmitters

    def undetermined(self):
        return self._undetermined

    def node_bits(self):
        return self._node_bits

    def zero_error(self):
        return self._zero_error

    def total_bits(self):
        return sum(self._node_bits)

    def rate(self):
        return self.total_bits() / self._block_length

    def table_rows(self):
        return [[node, coded, bits] for node, coded, bits in zip(self._transmitters, self._undetermined, self._node_bits)]

    def to_json(self):
        return serialization.versioned({
            "n": self._n,
            "theta": self._theta,
            "p": self._p,
            "block_length": self._block_length,
            "seed": self._seed,
            "mode": self._mode,
            "total_bits": self.total_bits(),
            "rate": self.rate(),
            "zero_error": self._zero_error,
            "transmissions": [{"node": node, "undetermined": coded, "bits": bits}
                              for node, coded, bits in zip(self._transmitters, self._undetermined, self._node_bits)]
        })

    def __repr__(self):
        return "DiscardRun(n=%d, theta=%d, p=%.3g, N=%d, rate=%.6f)" % (self._n, self._theta, self._p, self._block_length, self.rate())
