import functools
import logging
import math

from backend.core.Arithmetic import binom, log2
from backend.core.BroadcastError import BroadcastError
from backend.core.FunctionSpec import FunctionSpec
from backend.core.FunctionSpecError import FunctionSpecError
from backend.worstcase.ComplexityResult import ComplexityResult
from backend.worstcase.FoolingSets import gen_threshold_fooling_count

logger = logging.getLogger("colloq.worstcase")


def threshold_count(n, theta):
    return binom(n + 1, theta)


def delta_count(n, theta):
    """Count the columns of weight theta - 1, theta and theta + 1."""
    count = binom(n, theta - 1) + binom(n, theta) + binom(n, theta + 1)
    if count != binom(n + 1, theta) + binom(n, theta + 1):
        raise BroadcastError("Delta count identity failed for n=%d, theta=%d." % (n, theta))
    return count


def interval_counts(a, b, n):
    """Return the (lower, upper) outcome counts of the interval function on [a, b].

    The two cases a + b <= n and a + b >= n agree when a + b = n.
    """
    if not 1 <= a <= b <= n:
        raise FunctionSpecError("Interval [%r, %r] must satisfy 1 <= a <= b <= %r." % (a, b, n))
    width = b - a + 1
    if a + b <= n:
        return binom(n + 1, b + 1) + binom(n, a - 1), binom(n + 1, b + 1) + width * binom(n, a - 1)
    return binom(n + 1, a) + binom(n, b + 1), binom(n + 1, a) + width * binom(n, b + 1)


def interval_gap_bits(a, b, n):
    """Additive gap between the interval bounds; never more than log2(b - a + 2)."""
    lower, upper = interval_counts(a, b, n)
    return log2(upper) - log2(lower)


def interval_residual_ratio(a, b, n):
    """Ratio of the interval's correction term to its leading term in the a + b <= n case."""
    if not 1 <= a <= b <= n:
        raise FunctionSpecError("Interval [%r, %r] must satisfy 1 <= a <= b <= %r." % (a, b, n))
    return (b - a + 1) * binom(n, a - 1) / binom(n + 1, b + 1)


def percentile_spec(alpha, beta, n):
    """Interval function that is 1 when the fraction of ones lies in [alpha, beta]."""
    if not 0.0 <= alpha <= beta <= 1.0:
        raise FunctionSpecError("Percentiles must satisfy 0 <= alpha <= beta <= 1, got %r, %r." % (alpha, beta))
    a = max(1, math.ceil(alpha * n))
    b = min(n, math.floor(beta * n))
    if a > b:
        raise FunctionSpecError("Percentiles [%r, %r] select no weight in 1..%d." % (alpha, beta, n))
    return FunctionSpec.interval(n, a, b)


@functools.lru_cache(maxsize=None)
def interval_recursion_count(a, b, m):
    """Outcome count of the scheme in which the last node speaks first and the rest recurse.

    h(a, b, m) = h(a - 1, b - 1, m - 1) + h(a, b, m - 1), with the interval
    clamped to [0, m] and threshold, delta and constant cases as exact seeds.
    """
    a = max(a, 0)
    b = min(b, m)
    if a > b:
        return 1
    if a == 0 and b == m:
        return 1
    if a == 0:
        return binom(m + 1, b + 1)
    if b == m:
        return binom(m + 1, a)
    if a == b:
        return binom(m + 1, a) + binom(m, a + 1)
    return interval_recursion_count(a - 1, b - 1, m - 1) + interval_recursion_count(a, b, m - 1)


def interval_recursion_upper(a, b, n):
    """Per-instance bits of the recursive interval scheme; at most the closed-form upper bound."""
    if not 1 <= a <= b <= n:
        raise FunctionSpecError("Interval [%r, %r] must satisfy 1 <= a <= b <= %r." % (a, b, n))
    return log2(interval_recursion_count(a, b, n))


def max_recursion_count(alphabet):
    """Outcome count of the single-round MAX scheme.

    The last node announces its value k; every other node then only needs to
    report how far it exceeds k, which is MAX over the alphabets (m_i - k)+.
    """
    alphabet = tuple(int(m) for m in alphabet)

    @functools.lru_cache(maxsize=None)
    def count(sizes):
        if not sizes:
            return 1
        *others, last = sizes
        total = 0
        for k in range(last + 1):
            total += count(tuple(m - k for m in others if m - k > 0))
        return total

    return count(tuple(m for m in alphabet if m > 0))


def complexity(spec):
    """Worst-case per-instance broadcast complexity of a symmetric function."""
    kind = spec.kind()
    n = spec.n()
    if kind == FunctionSpec.THRESHOLD:
        count = threshold_count(n, spec.theta())
        result = ComplexityResult(spec, count, count, "binom(n + 1, theta)")
    elif kind == FunctionSpec.DELTA:
        count = delta_count(n, spec.theta())
        result = ComplexityResult(spec, count, count, "binom(n + 1, theta) + binom(n, theta + 1)")
    elif kind == FunctionSpec.INTERVAL:
        lower, upper = interval_counts(spec.a(), spec.b(), n)
        case = "a + b <= n" if spec.a() + spec.b() <= n else "a + b >= n"
        result = ComplexityResult(spec, lower, upper, case)
    elif kind == FunctionSpec.GENERAL_THRESHOLD:
        count = gen_threshold_fooling_count(spec.theta(), spec.alphabet())
        result = ComplexityResult(spec, count, count, "[Y^theta] + [Y^(theta - 1)]")
    elif kind == FunctionSpec.PARITY:
        result = ComplexityResult(spec, 2 ** n, 2 ** n, "every node sends its bit")
    elif kind == FunctionSpec.MAX:
        lower = 1 + sum(spec.alphabet())
        result = ComplexityResult(spec, lower, max_recursion_count(spec.alphabet()), "single-round scheme")
    else:
        raise FunctionSpecError("Unsupported function %s." % spec)

    logger.info("Complexity of %s is %r.", spec, result)
    return result
