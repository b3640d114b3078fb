from backend.core.Arithmetic import log2
from backend.core.FunctionSpec import FunctionSpec
from backend.core.MeasurementVector import MeasurementVector
import backend.core.Serialization as serialization


class FoolingSet:
    """A set of measurement columns claimed to fool every protocol for a function.

    The block-level family is all N-column matrices over these columns, so the
    per-instance lower bound is log2 of the column count.
    """

    def __init__(self, spec, columns):
        self._spec = spec
        self._columns = frozenset(columns)

    def spec(self):
        return self._spec

    def columns(self):
        return sorted(self._columns)

    def size(self):
        return len(self._columns)

    def lower_bound_bits(self):
        return log2(len(self._columns))

    def validate(self):
        """Return the (valid, witness) pair of the fooling-set check."""
        from backend.worstcase.FoolingSets import is_fooling_set
        return is_fooling_set(self._spec, self._columns)

    def to_json(self):
        return {
            "function": self._spec.to_json(),
            "size": len(self._columns),
            "lower_bound_bits": self.lower_bound_bits(),
            "columns": [list(column.values()) for column in self.columns()]
        }

    @classmethod
    def from_json(cls, document):
        serialization.validate(document, "fooling_set_schema")
        spec = FunctionSpec.from_json(document["function"])
        return cls(spec, (MeasurementVector(values, spec.alphabet()) for values in document["columns"]))

    def __len__(self):
        return len(self._columns)

    def __repr__(self):
        return "FoolingSet(%s, %d columns)" % (self._spec, len(self._columns))
