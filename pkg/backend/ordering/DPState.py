class DPState:
    """Remaining nodes (1-based ids into the sorted profile) and the ones still needed.

    The state computes the threshold function Pi_{residual} over `remaining`.
    """

    def __init__(self, remaining, residual):
        self._remaining = frozenset(remaining)
        self._residual = int(residual)
        if self._residual < 0:
            raise ValueError("Residual threshold must be non-negative, got %d." % self._residual)

    @classmethod
    def root(cls, n, theta):
        return cls(range(1, n + 1), theta)

    def remaining(self):
        return self._remaining

    def residual(self):
        return self._residual

    def size(self):
        return len(self._remaining)

    def rank_offset(self):
        """k in Pi_{m-k}: how many remaining nodes may still be zero without deciding the function."""
        return len(self._remaining) - self._residual

    def is_terminal(self):
        return self._residual == 0 or self._residual > len(self._remaining)

    def terminal_value(self):
        """Function value of a terminal state: 1 once enough ones were heard, else 0."""
        return int(self._residual == 0)

    def after(self, node, bit):
        """State after `node` broadcasts `bit`."""
        return DPState(self._remaining - {node}, self._residual - bit)

    def to_json(self):
        return {"remaining": sorted(self._remaining), "residual": self._residual}

    def __hash__(self):
        return hash((self._remaining, self._residual))

    def __eq__(self, other):
        return isinstance(other, self.__class__) and \
               (self._remaining, self._residual) == (other.remaining(), other.residual())

    def __lt__(self, other):
        return (sorted(self._remaining), self._residual) < (sorted(other.remaining()), other.residual())

    def __repr__(self):
        return "({%s}, %d)" % (",".join(str(node) for node in sorted(self._remaining)), self._residual)
