from backend.core.Arithmetic import DEFAULT_TOLERANCE, log2
from backend.core.BroadcastError import BroadcastError


class ComplexityResult:
    """Per-instance worst-case broadcast complexity of a function, as a lower/upper pair in bits.

    The underlying outcome counts are kept exact so callers can compare them
    without floating point.
    """

    def __init__(self, spec, lower_count, upper_count, note=""):
        self._spec = spec
        self._lower_count = lower_count
        self._upper_count = upper_count
        self._lower_bits = log2(lower_count)
        self._upper_bits = log2(upper_count)
        self._note = note
        if self._lower_bits > self._upper_bits + DEFAULT_TOLERANCE:
            raise BroadcastError("Lower bound %f exceeds upper bound %f for %s." % (self._lower_bits, self._upper_bits, spec))

    def spec(self):
        return self._spec

    def lower_count(self):
        return self._lower_count

    def upper_count(self):
        return self._upper_count

    def lower_bits(self):
        return self._lower_bits

    def upper_bits(self):
        return self._upper_bits

    def exact(self):
        return abs(self._upper_bits - self._lower_bits) <= DEFAULT_TOLERANCE

    def note(self):
        return self._note

    def to_json(self):
        return {
            "function": self._spec.to_json(),
            "lower_bits": self._lower_bits,
            "upper_bits": self._upper_bits,
            "lower_count": str(self._lower_count),
            "upper_count": str(self._upper_count),
            "exact": self.exact(),
            "note": self._note
        }

    def __repr__(self):
        if self.exact():
            return "%s: %.6f bits (exact)" % (self._spec, self._lower_bits)
        return "%s: [%.6f, %.6f] bits" % (self._spec, self._lower_bits, self._upper_bits)
