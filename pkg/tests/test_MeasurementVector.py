import pytest

from backend.core.FunctionSpecError import FunctionSpecError
from backend.core.MeasurementVector import MeasurementVector


def test_measurement_accessors():
    column = MeasurementVector((0, 2, 1), alphabet=(1, 2, 3))
    assert column.value(2) == 2
    assert column.weight() == 3
    assert len(column) == 3
    assert column.with_value(1, 1).values() == (1, 2, 1)


def test_boolean_default_alphabet():
    assert MeasurementVector((1, 0)).alphabet() == (1, 1)
    with pytest.raises(FunctionSpecError):
        MeasurementVector((2, 0))


def test_alphabet_length_must_match():
    with pytest.raises(FunctionSpecError):
        MeasurementVector((1, 0), alphabet=(1,))


def test_ordering_and_json():
    columns = sorted([MeasurementVector((1, 0)), MeasurementVector((0, 1))])
    assert [column.values() for column in columns] == [(0, 1), (1, 0)]
    column = MeasurementVector((0, 3), alphabet=(2, 3))
    assert MeasurementVector.from_json(column.to_json()) == column
