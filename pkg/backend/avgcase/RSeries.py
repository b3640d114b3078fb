import math

from backend.core.Arithmetic import binom
from backend.core.FunctionSpecError import FunctionSpecError
from backend.core.ProbabilityDomainError import ProbabilityDomainError


def _check(n, theta, p):
    if not 0.0 < p < 1.0:
        raise ProbabilityDomainError("p must lie strictly between 0 and 1, got %r." % (p,))
    if theta < 0 or n < theta:
        raise FunctionSpecError("Need 0 <= theta <= n, got theta=%r, n=%r." % (theta, n))


def r_value(n, theta, p):
    """R = sum_{i=theta}^{n-1} sum_{j=0}^{theta-1} binom(i, j) p^j (1-p)^(i-j).

    R counts, in expectation, the transmissions past the first theta that an
    instance still needs because fewer than theta ones have been heard.
    """
    _check(n, theta, p)
    return math.fsum(binom(i, j) * p ** j * (1.0 - p) ** (i - j)
                     for i in range(theta, n) for j in range(theta))


def r_value_recursive(n, theta, p):
    """Same value via R_theta = R_{theta-1} + sum_{i=theta}^{n-1} binom(i, theta-1) p^(theta-1) (1-p)^(i-theta+1) - (1 - p^(theta-1)), R_0 = 0."""
    _check(n, theta, p)
    value = 0.0
    for t in range(1, theta + 1):
        step = math.fsum(binom(i, t - 1) * p ** (t - 1) * (1.0 - p) ** (i - t + 1) for i in range(t, n))
        value = value + step - (1.0 - p ** (t - 1))
    return value


def r_bound(theta, p):
    return theta * (1.0 - p) / p


class RSeries:
    """R values for one (theta, p) over a range of n, with the bound theta (1 - p) / p."""

    def __init__(self, theta, p, n_values):
        self._theta = theta
        self._p = p
        self._values = {n: r_value(n, theta, p) for n in n_values}

    def theta(self):
        return self._theta

    def p(self):
        return self._p

    def values(self):
        return dict(self._values)

    def bound(self):
        return r_bound(self._theta, self._p)

    def within_bound(self, tolerance=1e-9):
        return all(value <= self.bound() + tolerance for value in self._values.values())

    def non_decreasing(self):
        ordered = [self._values[n] for n in sorted(self._values)]
        return all(later >= earlier for earlier, later in zip(ordered, ordered[1:]))

    def __repr__(self):
        return "RSeries(theta=%d, p=%.3g, %d values)" % (self._theta, self._p, len(self._values))
