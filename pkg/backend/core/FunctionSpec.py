from backend.core.FunctionSpecError import FunctionSpecError
import backend.core.Serialization as serialization


class FunctionSpec:
    """A symmetric function of the n node measurements.

    Boolean kinds (threshold, delta, interval, parity) take one bit per node.
    MAX and general threshold take node i's value from {0, ..., m_i}.
    """
    (THRESHOLD, DELTA, INTERVAL, PARITY, MAX, GENERAL_THRESHOLD) = range(6)
    kind_string = ["threshold", "delta", "interval", "parity", "max", "gthreshold"]

    def __init__(self, kind, n, theta=None, a=None, b=None, alphabet=None):
        if kind not in range(6):
            raise FunctionSpecError("Unknown function kind %r." % (kind,))
        if n is None or int(n) < 1:
            raise FunctionSpecError("A function needs at least one node, got n=%r." % (n,))
        self._kind = kind
        self._n = int(n)
        self._theta = theta
        self._a = a
        self._b = b

        if alphabet is None:
            if kind in (self.MAX, self.GENERAL_THRESHOLD):
                raise FunctionSpecError("%s requires per-node alphabet sizes." % self.kind_string[kind])
            alphabet = (1,) * self._n
        self._alphabet = tuple(int(m) for m in alphabet)
        if len(self._alphabet) != self._n:
            raise FunctionSpecError("Alphabet %s does not list %d nodes." % (self._alphabet, self._n))
        if any(m < 1 for m in self._alphabet):
            raise FunctionSpecError("Alphabet sizes must satisfy m_i >= 1, got %s." % (self._alphabet,))
        if kind not in (self.MAX, self.GENERAL_THRESHOLD) and any(m != 1 for m in self._alphabet):
            raise FunctionSpecError("%s is defined over Boolean measurements only." % self.kind_string[kind])

        if kind in (self.THRESHOLD, self.DELTA):
            if theta is None or not 1 <= theta <= self._n:
                raise FunctionSpecError("Threshold %r is outside 1..%d." % (theta, self._n))
        elif kind == self.INTERVAL:
            if a is None or b is None or not 1 <= a <= b <= self._n:
                raise FunctionSpecError("Interval [%r, %r] must satisfy 1 <= a <= b <= %d." % (a, b, self._n))
        elif kind == self.GENERAL_THRESHOLD:
            if theta is None or not 1 <= theta <= sum(self._alphabet):
                raise FunctionSpecError("Threshold %r is outside 1..%d." % (theta, sum(self._alphabet)))

    @classmethod
    def threshold(cls, n, theta):
        return cls(cls.THRESHOLD, n, theta=theta)

    @classmethod
    def and_function(cls, n):
        return cls(cls.THRESHOLD, n, theta=n)

    @classmethod
    def or_function(cls, n):
        return cls(cls.THRESHOLD, n, theta=1)

    @classmethod
    def delta(cls, n, theta):
        return cls(cls.DELTA, n, theta=theta)

    @classmethod
    def interval(cls, n, a, b):
        return cls(cls.INTERVAL, n, a=a, b=b)

    @classmethod
    def parity(cls, n):
        return cls(cls.PARITY, n)

    @classmethod
    def max_function(cls, alphabet):
        return cls(cls.MAX, len(alphabet), alphabet=alphabet)

    @classmethod
    def uniform_max(cls, n, m):
        return cls(cls.MAX, n, alphabet=(m,) * n)

    @classmethod
    def general_threshold(cls, theta, alphabet):
        return cls(cls.GENERAL_THRESHOLD, len(alphabet), theta=theta, alphabet=alphabet)

    def kind(self):
        return self._kind

    def kind_name(self):
        return self.kind_string[self._kind]

    def n(self):
        return self._n

    def theta(self):
        return self._theta

    def a(self):
        return self._a

    def b(self):
        return self._b

    def alphabet(self):
        return self._alphabet

    def is_boolean(self):
        return all(m == 1 for m in self._alphabet)

    def evaluate(self, values):
        """Evaluate the function on one column of measurements."""
        total = sum(values)
        if self._kind in (self.THRESHOLD, self.GENERAL_THRESHOLD):
            return int(total >= self._theta)
        if self._kind == self.DELTA:
            return int(total == self._theta)
        if self._kind == self.INTERVAL:
            return int(self._a <= total <= self._b)
        if self._kind == self.PARITY:
            return total % 2
        return max(values)

    def to_json(self):
        document = {"kind": self.kind_name(), "n": self._n}
        if self._theta is not None:
            document["theta"] = self._theta
        if self._kind == self.INTERVAL:
            document["a"] = self._a
            document["b"] = self._b
        if self._kind in (self.MAX, self.GENERAL_THRESHOLD):
            document["alphabet"] = list(self._alphabet)
        return document

    @classmethod
    def from_json(cls, document):
        serialization.validate(document, "function_schema")
        return cls(cls.kind_string.index(document["kind"]),
                   document["n"],
                   theta=document.get("theta"),
                   a=document.get("a"),
                   b=document.get("b"),
                   alphabet=document.get("alphabet"))

    def __hash__(self):
        return hash((self._kind, self._n, self._theta, self._a, self._b, self._alphabet))

    def __eq__(self, other):
        return isinstance(other, self.__class__) and self.to_json() == other.to_json()

    def __repr__(self):
        if self._kind == self.INTERVAL:
            return "interval[%d, %d](n=%d)" % (self._a, self._b, self._n)
        if self._kind in (self.THRESHOLD, self.DELTA):
            return "%s(n=%d, theta=%d)" % (self.kind_name(), self._n, self._theta)
        if self._kind == self.GENERAL_THRESHOLD:
            return "gthreshold(theta=%d, alphabet=%s)" % (self._theta, self._alphabet)
        if self._kind == self.MAX:
            return "max(alphabet=%s)" % (self._alphabet,)
        return "parity(n=%d)" % self._n
