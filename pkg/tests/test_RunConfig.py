import argparse
import json
import os

import pytest

from backend.core.FunctionSpecError import FunctionSpecError
from backend.core.SerializationError import SerializationError
from interfaces.cmd.RunConfig import OUTPUT_DIRECTORY_VARIABLE, RunConfig, parse_list


def namespace(subcommand, **values):
    return argparse.Namespace(subcommand=subcommand, config_file=values.pop("config_file", None), **values)


def test_parse_list():
    assert parse_list("0.2, 0.5,", float) == (0.2, 0.5)
    assert parse_list([1, 2], int) == (1, 2)
    assert parse_list(0.4, float) == (0.4,)
    assert parse_list(None, float) is None
    with pytest.raises(FunctionSpecError):
        parse_list("0.2,x", float)


def test_defaults_and_profile():
    config = RunConfig("order", {"p": "0.6,0.2", "theta": 1})
    assert config.get("cost") == "entropy"
    assert config.output_format() == "text"
    profile = config.profile()
    assert profile.probs() == (0.2, 0.6)
    assert profile.original_ids() == (2, 1)


def test_stochastic_commands_need_a_seed():
    with pytest.raises(FunctionSpecError):
        RunConfig("block", {"p": "0.5", "theta": 1})
    with pytest.raises(FunctionSpecError):
        RunConfig("verify", {"check": "rule"})
    assert RunConfig("verify", {"check": "taylor"}).command() == ("verify", "taylor")
    assert RunConfig("simulate", {"check": "discard", "seed": 4}).is_stochastic()


def test_require_names_the_flag():
    with pytest.raises(FunctionSpecError) as error:
        RunConfig("approx", {}).require("budget")
    assert "--budget" in str(error.value)


def test_single_probability():
    assert RunConfig("avgcase", {"p": "0.3", "seed": 1}).single_probability() == 0.3
    with pytest.raises(ValueError):
        RunConfig("avgcase", {"p": "0.3,0.4", "seed": 1}).single_probability()


def test_block_length_is_checked():
    with pytest.raises(FunctionSpecError):
        RunConfig("kraft", {"block_length": 0})
    assert RunConfig("kraft", {}).block_length(64) == 64


def test_output_file_resolves_against_the_output_directory(monkeypatch, tmp_path):
    monkeypatch.setenv(OUTPUT_DIRECTORY_VARIABLE, str(tmp_path))
    assert RunConfig("parity", {"output_file": "plan.json"}).output_file() == os.path.join(str(tmp_path), "plan.json")
    absolute = os.path.join(str(tmp_path), "other.json")
    assert RunConfig("parity", {"output_file": absolute}).output_file() == absolute
    assert RunConfig("parity", {}).output_file() is None


def test_flags_override_the_config_file(tmp_path):
    path = os.path.join(str(tmp_path), "run.json")
    with open(path, "w", encoding="utf-8") as config_file:
        json.dump({"version": 1, "subcommand": "order", "p": [0.2, 0.6], "theta": 1, "cost": "unit"}, config_file)
    config = RunConfig.from_arguments(namespace("order", config_file=path, theta=2, p=None))
    assert config.get("theta") == 2
    assert config.get("cost") == "unit"
    assert config.get("p") == (0.2, 0.6)


def test_config_file_for_another_subcommand(tmp_path):
    path = os.path.join(str(tmp_path), "run.json")
    with open(path, "w", encoding="utf-8") as config_file:
        json.dump({"subcommand": "parity", "budget": 1}, config_file)
    with pytest.raises(FunctionSpecError):
        RunConfig.from_arguments(namespace("order", config_file=path))


def test_config_file_is_validated(tmp_path):
    path = os.path.join(str(tmp_path), "run.json")
    with open(path, "w", encoding="utf-8") as config_file:
        json.dump({"subcommand": "order", "probabilities": [0.2]}, config_file)
    with pytest.raises(SerializationError):
        RunConfig.from_arguments(namespace("order", config_file=path))
