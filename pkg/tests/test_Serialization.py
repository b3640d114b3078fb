import json
import os

import pytest

import backend.core.Serialization as serialization
from backend.core.SerializationError import SerializationError

SCHEMAS = ["profile_schema", "function_schema", "measurement_schema", "transcript_schema", "policy_schema",
           "complexity_schema", "code_length_plan_schema", "fooling_set_schema", "block_run_schema",
           "discard_run_schema", "budget_table_schema", "parity_plan_schema", "verify_report_schema",
           "run_config_schema"]


@pytest.mark.parametrize("schema_name", SCHEMAS)
def test_every_schema_ships_and_is_versioned(schema_name):
    schema = serialization.load_schema(schema_name)
    assert schema is not None
    assert schema["properties"]["version"] == {"enum": [1]}


def test_missing_schema_skips_validation(caplog):
    assert serialization.validate({"anything": 1}, "no_such_schema") == {"anything": 1}
    assert "skipping validation" in caplog.text


def test_validation_failure_chains_the_schema_error():
    with pytest.raises(SerializationError) as error:
        serialization.validate({"probs": "0.5"}, "profile_schema")
    assert error.value.__cause__ is not None


def test_versioned_stamps_first():
    assert serialization.versioned({"a": 1}) == {"version": serialization.SCHEMA_VERSION, "a": 1}


def test_write_and_read(tmp_path):
    path = os.path.join(tmp_path, "profile.json")
    serialization.write_json({"probs": [0.25, 0.5]}, path, "profile_schema")
    assert serialization.read_json(path, "profile_schema") == {"probs": [0.25, 0.5]}
    with open(path, encoding="utf-8") as document_file:
        assert json.loads(document_file.read()) == {"probs": [0.25, 0.5]}


def test_read_rejects_malformed_json(tmp_path):
    path = os.path.join(tmp_path, "broken.json")
    with open(path, "w", encoding="utf-8") as document_file:
        document_file.write("{")
    with pytest.raises(SerializationError):
        serialization.read_json(path, "profile_schema")
