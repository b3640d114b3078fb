from backend.core.Arithmetic import check_probability


class PulseMapping:
    """Which bit value a node signals with a unit-energy pulse; silence means the other value.

    The pulse marks the less likely value, so the expected energy of one
    transmission is min(p, 1 - p). At p = 1/2 both mappings cost the same and
    the pulse marks 1.
    """

    def __init__(self, p):
        self._p = check_probability(p)
        self._pulse_value = 1 if self._p <= 0.5 else 0

    def p(self):
        return self._p

    def pulse_value(self):
        return self._pulse_value

    def silence_value(self):
        return 1 - self._pulse_value

    def energy(self):
        return self._p if self._pulse_value == 1 else 1.0 - self._p

    def encode(self, bit):
        """Return 1 for a pulse and 0 for silence."""
        return int(bit == self._pulse_value)

    def decode(self, pulse):
        return self._pulse_value if pulse else self.silence_value()

    def to_json(self):
        return {"p": self._p, "pulse_value": self._pulse_value, "energy": self.energy()}

    def __repr__(self):
        return "PulseMapping(p=%.6g, pulse means %d)" % (self._p, self._pulse_value)


def pulse_mapping(p):
    return PulseMapping(p)


def profile_pulse_mappings(profile):
    """Per-node mappings keyed by sorted node id."""
    return {node: PulseMapping(profile.prob(node)) for node in profile.nodes()}
