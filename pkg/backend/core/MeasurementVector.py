from backend.core.FunctionSpecError import FunctionSpecError
import backend.core.Serialization as serialization


class MeasurementVector:
    """One column of measurements, value_i in {0, ..., m_i} for node i (1-based)."""

    def __init__(self, values, alphabet=None):
        self._values = tuple(int(v) for v in values)
        if alphabet is None:
            alphabet = (1,) * len(self._values)
        self._alphabet = tuple(int(m) for m in alphabet)
        if len(self._alphabet) != len(self._values):
            raise FunctionSpecError("Measurement %s does not match alphabet %s." % (self._values, self._alphabet))
        for value, m in zip(self._values, self._alphabet):
            if not 0 <= value <= m:
                raise FunctionSpecError("Measurement %s violates alphabet %s." % (self._values, self._alphabet))

    def values(self):
        return self._values

    def alphabet(self):
        return self._alphabet

    def value(self, node):
        return self._values[node - 1]

    def weight(self):
        return sum(self._values)

    def with_value(self, node, value):
        """Return a copy with node's measurement replaced."""
        values = list(self._values)
        values[node - 1] = value
        return MeasurementVector(values, self._alphabet)

    def to_json(self):
        return {"values": list(self._values), "alphabet": list(self._alphabet)}

    @classmethod
    def from_json(cls, document):
        serialization.validate(document, "measurement_schema")
        return cls(document["values"], document.get("alphabet"))

    def __len__(self):
        return len(self._values)

    def __hash__(self):
        return hash(self._values)

    def __eq__(self, other):
        return isinstance(other, self.__class__) and self._values == other.values()

    def __lt__(self, other):
        return self._values < other.values()

    def __repr__(self):
        return "(" + ",".join(str(v) for v in self._values) + ")"
