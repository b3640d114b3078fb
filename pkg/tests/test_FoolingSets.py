import pytest

from backend.core.EnumerationLimitError import EnumerationLimitError
from backend.core.FunctionSpec import FunctionSpec
from backend.core.FunctionSpecError import FunctionSpecError
from backend.core.MeasurementVector import MeasurementVector
from backend.worstcase.FoolingSet import FoolingSet
from backend.worstcase.FoolingSets import enumerate_columns, gen_threshold_fooling_count, is_fooling_set, max_fooling_set
from backend.worstcase.WorstCaseComplexity import complexity


def test_threshold_fooling_set_matches_complexity():
    for n in range(1, 6):
        for theta in range(1, n + 1):
            spec = FunctionSpec.threshold(n, theta)
            assert max_fooling_set(spec).size() == complexity(spec).lower_count()


def test_interval_fooling_set():
    fooling_set = max_fooling_set(FunctionSpec.interval(4, 1, 2))
    assert fooling_set.size() == 11


def test_max_fooling_set():
    fooling_set = max_fooling_set(FunctionSpec.uniform_max(2, 2))
    assert fooling_set.size() == 5
    assert [column.values() for column in fooling_set.columns()] == [(0, 0), (0, 1), (0, 2), (1, 0), (2, 0)]


def test_gen_threshold_fooling_count():
    assert gen_threshold_fooling_count(2, (1, 1, 1)) == 6
    assert gen_threshold_fooling_count(2, (2, 2)) == 5
    with pytest.raises(FunctionSpecError):
        gen_threshold_fooling_count(5, (2, 2))


def test_general_threshold_fooling_set_is_valid():
    spec = FunctionSpec.general_threshold(3, (2, 2, 2))
    assert max_fooling_set(spec).size() == gen_threshold_fooling_count(3, (2, 2, 2))


def test_two_columns_of_equal_weight_for_and_are_not_fooling():
    spec = FunctionSpec.and_function(2)
    columns = [MeasurementVector((0, 1)), MeasurementVector((1, 0)), MeasurementVector((0, 0))]
    valid, witness = is_fooling_set(spec, columns)
    assert not valid
    assert MeasurementVector((0, 0)) in witness


def test_full_cube_is_not_a_threshold_fooling_set():
    spec = FunctionSpec.threshold(3, 2)
    assert not FoolingSet(spec, enumerate_columns(spec.alphabet())).validate()[0]


def test_column_length_must_match():
    with pytest.raises(FunctionSpecError):
        is_fooling_set(FunctionSpec.threshold(3, 2), [MeasurementVector((1, 0))])


def test_enumeration_is_capped():
    with pytest.raises(EnumerationLimitError):
        list(enumerate_columns((1,) * 21))


def test_fooling_set_json_round_trip():
    fooling_set = max_fooling_set(FunctionSpec.delta(3, 1))
    restored = FoolingSet.from_json(fooling_set.to_json())
    assert restored.columns() == fooling_set.columns()
    assert restored.spec() == fooling_set.spec()


def test_and_fooling_examples():
    spec = FunctionSpec.and_function(2)
    assert is_fooling_set(spec, [MeasurementVector((0, 1)), MeasurementVector((1, 0)), MeasurementVector((1, 1))]) == (True, None)
    assert is_fooling_set(spec, [MeasurementVector((0, 0)), MeasurementVector((1, 1))])[0]


def test_parity_fooling_set_is_the_full_cube():
    assert max_fooling_set(FunctionSpec.parity(4)).size() == 16
