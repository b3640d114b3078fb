from backend.core.PolicyError import PolicyError
import backend.core.Serialization as serialization


class Transcript:
    """Ordered (node id, broadcast symbol) pairs of a single-instance computation."""

    def __init__(self, entries=(), n=None):
        self._entries = tuple((int(node), int(symbol)) for node, symbol in entries)
        self._n = n
        nodes = [node for node, _ in self._entries]
        if len(set(nodes)) != len(nodes):
            raise PolicyError("Transcript %s repeats a transmitter." % (self._entries,))
        if n is not None and len(self._entries) > n:
            raise PolicyError("Transcript of length %d exceeds %d nodes." % (len(self._entries), n))

    def entries(self):
        return self._entries

    def nodes(self):
        return tuple(node for node, _ in self._entries)

    def symbols(self):
        return tuple(symbol for _, symbol in self._entries)

    def ones(self):
        return sum(self.symbols())

    def append(self, node, symbol):
        return Transcript(self._entries + ((node, symbol),), self._n)

    def to_json(self):
        return {"entries": [{"node": node, "symbol": symbol} for node, symbol in self._entries]}

    @classmethod
    def from_json(cls, document, n=None):
        serialization.validate(document, "transcript_schema")
        return cls(((entry["node"], entry["symbol"]) for entry in document["entries"]), n)

    def __len__(self):
        return len(self._entries)

    def __hash__(self):
        return hash(self._entries)

    def __eq__(self, other):
        return isinstance(other, self.__class__) and self._entries == other.entries()

    def __repr__(self):
        return " ".join("%d:%d" % entry for entry in self._entries)
