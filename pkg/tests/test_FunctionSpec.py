import itertools

import pytest

from backend.core.FunctionSpec import FunctionSpec
from backend.core.FunctionSpecError import FunctionSpecError


def test_constructors():
    assert FunctionSpec.and_function(3) == FunctionSpec.threshold(3, 3)
    assert FunctionSpec.or_function(3) == FunctionSpec.threshold(3, 1)
    assert FunctionSpec.uniform_max(2, 3).alphabet() == (3, 3)
    assert FunctionSpec.general_threshold(2, (2, 2)).n() == 2
    assert FunctionSpec.parity(4).is_boolean()
    assert not FunctionSpec.max_function((1, 2)).is_boolean()


def test_evaluate():
    assert FunctionSpec.threshold(3, 2).evaluate((1, 0, 1)) == 1
    assert FunctionSpec.threshold(3, 2).evaluate((1, 0, 0)) == 0
    assert FunctionSpec.delta(3, 1).evaluate((0, 1, 0)) == 1
    assert FunctionSpec.delta(3, 1).evaluate((1, 1, 0)) == 0
    assert FunctionSpec.interval(4, 1, 2).evaluate((1, 1, 0, 0)) == 1
    assert FunctionSpec.interval(4, 1, 2).evaluate((1, 1, 1, 0)) == 0
    assert FunctionSpec.parity(3).evaluate((1, 1, 1)) == 1
    assert FunctionSpec.max_function((2, 3)).evaluate((2, 1)) == 2
    assert FunctionSpec.general_threshold(3, (2, 2)).evaluate((2, 1)) == 1


def test_functions_are_symmetric():
    spec = FunctionSpec.interval(4, 2, 3)
    for column in itertools.product((0, 1), repeat=4):
        values = {spec.evaluate(permuted) for permuted in itertools.permutations(column)}
        assert len(values) == 1


@pytest.mark.parametrize("build", [
    lambda: FunctionSpec.threshold(3, 4),
    lambda: FunctionSpec.threshold(3, 0),
    lambda: FunctionSpec.delta(2, 3),
    lambda: FunctionSpec.interval(4, 3, 2),
    lambda: FunctionSpec.interval(4, 0, 2),
    lambda: FunctionSpec.max_function((0, 2)),
    lambda: FunctionSpec.general_threshold(5, (2, 2)),
    lambda: FunctionSpec(FunctionSpec.THRESHOLD, 2, theta=1, alphabet=(2, 1)),
    lambda: FunctionSpec(FunctionSpec.MAX, 2),
    lambda: FunctionSpec.parity(0),
])
def test_invalid_specs(build):
    with pytest.raises(FunctionSpecError):
        build()


def test_json_round_trip():
    for spec in (FunctionSpec.threshold(5, 2), FunctionSpec.interval(6, 2, 4), FunctionSpec.parity(3),
                 FunctionSpec.max_function((1, 3)), FunctionSpec.general_threshold(3, (2, 1, 2))):
        assert FunctionSpec.from_json(spec.to_json()) == spec
