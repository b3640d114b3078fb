import math

import numpy as np

from backend.core.ProbabilityDomainError import ProbabilityDomainError

DEFAULT_TOLERANCE = 1e-9


def check_probability(p):
    """Return p as a float, raising ProbabilityDomainError unless 0 <= p <= 1."""
    try:
        value = float(p)
    except (TypeError, ValueError) as e:
        raise ProbabilityDomainError("Probability `%s` is not a real number." % (p,)) from e
    if math.isnan(value) or value < 0.0 or value > 1.0:
        raise ProbabilityDomainError("Probability %r lies outside [0, 1]." % value)
    return value


def binary_entropy(p):
    """Return the binary entropy of a Bernoulli(p) variable in bits.

    The convention 0 * log2(0) = 0 is used, so H(0) = H(1) = 0.
    """
    p = check_probability(p)
    if p == 0.0 or p == 1.0:
        return 0.0
    return float(-p * np.log2(p) - (1.0 - p) * np.log2(1.0 - p))


def binom(n, k):
    """Exact binomial coefficient, zero when k < 0 or k > n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def log2(value):
    """Base-2 logarithm that accepts arbitrarily large exact integers."""
    if value <= 0:
        raise ValueError("log2 is undefined for %r." % value)
    return math.log2(value)


def within_tolerance(left, right, tolerance=DEFAULT_TOLERANCE):
    return abs(left - right) <= tolerance
