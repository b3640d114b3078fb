import itertools
import logging
import math

from backend.core.EnumerationLimitError import EnumerationLimitError
from backend.core.FunctionSpec import FunctionSpec
from backend.core.FunctionSpecError import FunctionSpecError
from backend.core.MeasurementVector import MeasurementVector
from backend.worstcase.FoolingSet import FoolingSet
from backend.worstcase.GenPoly import GenPoly

MAX_ENUMERATION_NODES = 20
MAX_CANDIDATE_COLUMNS = 2 ** 20

logger = logging.getLogger("colloq.worstcase")


def column_count(alphabet):
    return math.prod(m + 1 for m in alphabet)


def check_enumeration_limits(alphabet):
    if len(alphabet) > MAX_ENUMERATION_NODES:
        raise EnumerationLimitError("Column enumeration is capped at %d nodes, got %d." % (MAX_ENUMERATION_NODES, len(alphabet)))
    if column_count(alphabet) > MAX_CANDIDATE_COLUMNS:
        raise EnumerationLimitError("Column enumeration is capped at %d candidate columns, got %d." % (MAX_CANDIDATE_COLUMNS, column_count(alphabet)))


def enumerate_columns(alphabet, weights=None):
    """Yield every MeasurementVector over the alphabet, optionally only those whose sum is in `weights`."""
    check_enumeration_limits(alphabet)
    for values in itertools.product(*(range(m + 1) for m in alphabet)):
        if weights is None or sum(values) in weights:
            yield MeasurementVector(values, alphabet)


def _swap_changes_value(spec, column, other):
    value = spec.evaluate(column.values())
    for node in range(1, len(column) + 1):
        if column.value(node) == other.value(node):
            continue
        if spec.evaluate(column.with_value(node, other.value(node)).values()) != value:
            return True
    return False


def is_fooling_set(spec, columns):
    """Check the fooling-set property column pair by column pair.

    A pair passes when the function differs on the two columns, or when
    replacing a single coordinate of one column by the other's changes the
    function value of that column. Returns (True, None) or (False, pair).
    """
    columns = sorted(set(columns))
    for column in columns:
        if len(column) != spec.n():
            raise FunctionSpecError("Column %s does not have %d entries." % (column, spec.n()))

    for x, y in itertools.combinations(columns, 2):
        if spec.evaluate(x.values()) != spec.evaluate(y.values()):
            continue
        if _swap_changes_value(spec, x, y) or _swap_changes_value(spec, y, x):
            continue
        logger.debug("Columns %s and %s share a monochromatic rectangle for %s.", x, y, spec)
        return False, (x, y)
    return True, None


def fooling_weights(spec):
    """Column weights of the canonical fooling construction for weight-determined kinds."""
    kind = spec.kind()
    if kind in (FunctionSpec.THRESHOLD, FunctionSpec.GENERAL_THRESHOLD):
        return {spec.theta() - 1, spec.theta()}
    if kind == FunctionSpec.DELTA:
        return {spec.theta() - 1, spec.theta(), spec.theta() + 1}
    if kind == FunctionSpec.INTERVAL:
        a, b = spec.a(), spec.b()
        if a + b <= spec.n():
            return {a - 1, b, b + 1}
        return {a - 1, a, b + 1}
    if kind == FunctionSpec.PARITY:
        return set(range(spec.n() + 1))
    raise FunctionSpecError("No weight construction for %s." % spec)


def max_fooling_set(spec):
    """Build the canonical fooling set of a function and check it before returning."""
    if spec.kind() == FunctionSpec.MAX:
        check_enumeration_limits(spec.alphabet())
        zero = (0,) * spec.n()
        columns = {MeasurementVector(zero, spec.alphabet())}
        for node, m in enumerate(spec.alphabet()):
            for value in range(1, m + 1):
                values = list(zero)
                values[node] = value
                columns.add(MeasurementVector(values, spec.alphabet()))
    else:
        columns = set(enumerate_columns(spec.alphabet(), fooling_weights(spec)))

    fooling_set = FoolingSet(spec, columns)
    valid, witness = fooling_set.validate()
    if not valid:
        raise FunctionSpecError("Construction for %s is not a fooling set, witness %s." % (spec, witness))
    logger.info("Built fooling set of %d columns for %s.", fooling_set.size(), spec)
    return fooling_set


def gen_threshold_fooling_count(theta, alphabet):
    """Return [Y^theta] + [Y^(theta - 1)] of prod_i (1 + Y + ... + Y^{m_i})."""
    alphabet = tuple(alphabet)
    if not 1 <= theta <= sum(alphabet):
        raise FunctionSpecError("Threshold %r is outside 1..%d." % (theta, sum(alphabet)))
    return GenPoly(alphabet).threshold_count(theta)
