#!/usr/bin/env python3
"""
Tests for settings resolution and the YAML configuration file.
"""

import os
import sys

import pytest
import yaml

# Add the parent directory to sys.path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from utils.config import (
    DEFAULT_SETTINGS,
    DEFAULT_SUITES,
    default_configuration,
    get_setting,
    load_configuration,
    suite_parameters,
    validate_configuration,
)


@pytest.fixture
def isolated(tmp_path, monkeypatch):
    """Point DRA_CONFIG at an empty directory and clear the DRA_* overrides."""
    for name in ("DRA_FUEL", "DRA_RADICAL_BOUND", "DRA_LOG_DIR"):
        monkeypatch.delenv(name, raising=False)
    path = tmp_path / "dra.yaml"
    monkeypatch.setenv("DRA_CONFIG", str(path))
    return path


def test_load_creates_default_file(isolated):
    config = load_configuration(str(isolated))
    assert isolated.exists()
    assert config == default_configuration()
    with open(isolated) as f:
        assert yaml.safe_load(f)["settings"]["fuel"] == DEFAULT_SETTINGS["fuel"]


def test_file_overrides_merge_with_defaults(isolated):
    isolated.write_text(yaml.dump({"suites": {"fn": {"max_n": 3}}, "settings": {"radical_bound": 10}}))
    config = load_configuration(str(isolated))
    params = suite_parameters("fn", config)
    assert params["max_n"] == 3
    assert params["coefficient_max_n"] == DEFAULT_SUITES["fn"]["coefficient_max_n"]
    assert config["settings"]["fuel"] == DEFAULT_SETTINGS["fuel"]
    assert get_setting("radical_bound") == 10


def test_unreadable_file_falls_back_to_defaults(isolated):
    isolated.write_text("settings: [unclosed")
    assert load_configuration(str(isolated)) == default_configuration()


@pytest.mark.parametrize("config, valid", [
    (default_configuration(), True),
    ({}, False),
    ({"settings": {"fuel": -1}}, False),
    ({"settings": {"radical_bound": "ten"}}, False),
    ({"settings": {"fuel": True}}, False),
    ({"settings": {"fuel": 10}, "suites": {"nonsense": {}}}, False),
    ({"settings": {"log_dir": "elsewhere"}}, True),
])
def test_validate_configuration(config, valid):
    assert validate_configuration(config) is valid


def test_environment_overrides_file(isolated, monkeypatch):
    isolated.write_text(yaml.dump({"settings": {"fuel": 77}}))
    assert get_setting("fuel") == 77
    monkeypatch.setenv("DRA_FUEL", "500")
    assert get_setting("fuel") == 500


def test_invalid_environment_value_is_ignored(isolated, monkeypatch):
    monkeypatch.setenv("DRA_RADICAL_BOUND", "abc")
    assert get_setting("radical_bound") == DEFAULT_SETTINGS["radical_bound"]
    monkeypatch.setenv("DRA_RADICAL_BOUND", "-4")
    assert get_setting("radical_bound") == DEFAULT_SETTINGS["radical_bound"]


def test_string_setting_from_environment(isolated, monkeypatch):
    monkeypatch.setenv("DRA_LOG_DIR", "/tmp/dra-logs")
    assert get_setting("log_dir") == "/tmp/dra-logs"


def test_unknown_setting():
    with pytest.raises(KeyError):
        get_setting("colour")


def test_suite_parameters_without_config():
    assert suite_parameters("tensor") == DEFAULT_SUITES["tensor"]
    assert suite_parameters("tensor") is not DEFAULT_SUITES["tensor"]
    assert suite_parameters("missing") == {}
