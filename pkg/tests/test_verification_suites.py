#!/usr/bin/env python3
"""
Tests for the suite runner, using small parameters.
"""

import os
import sys
import json

import pytest

# Add the parent directory to sys.path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from utils.logging_system import CHECK_LOG, ERROR_LOG, SUITE_LOG
from verification_suites import SUITE_NAMES, SUITES, CheckResult, SuiteReport, run_check, run_suite

SMALL = {
    "suites": {
        "relations": {"associativity_trials": 3, "max_exponent": 1},
        "fn": {"max_n": 2, "coefficient_max_n": 3, "congruence_max_n": 2},
        "shapovalov": {"trials": 1, "max_p": 1, "max_power": 2, "zero_weight_size": 2, "radical_orders": [1, 3]},
        "irreps": {"dimensions": [1], "grid_size": 4},
        "tensor": {"windows": [[1, 4]]},
        "ghost": {"max_degree": 1, "odd_n": [1]},
    }
}


@pytest.fixture
def log_directory(tmp_path):
    return str(tmp_path / "logs")


def test_every_suite_is_registered():
    assert set(SUITE_NAMES) == set(SUITES)


def test_unknown_suite(log_directory):
    with pytest.raises(KeyError):
        run_suite("nonsense", SMALL, log_directory)


@pytest.mark.parametrize("name", ["relations", "fn", "irreps", "ghost"])
def test_small_suites_pass(name, log_directory):
    report = run_suite(name, SMALL, log_directory)
    assert report.passed, [c.to_json() for c in report.failures]
    ids = [c.check_id for c in report.checks]
    assert ids == sorted(ids)
    assert all(i.startswith(f"{name}.") for i in ids)


@pytest.mark.slow
@pytest.mark.parametrize("name", ["centrality", "shapovalov", "tensor"])
def test_slower_suites_pass(name, log_directory):
    report = run_suite(name, SMALL, log_directory)
    assert report.passed, [c.to_json() for c in report.failures]


def test_run_is_logged(log_directory):
    report = run_suite("fn", SMALL, log_directory)
    with open(os.path.join(log_directory, SUITE_LOG)) as f:
        (summary,) = [json.loads(line) for line in f]
    assert summary["run_id"] == report.run_id
    assert summary["check_count"] == len(report.checks)
    with open(os.path.join(log_directory, CHECK_LOG)) as f:
        assert len(f.readlines()) == len(report.checks)


def test_run_check_turns_exceptions_into_failures():
    result = run_check("demo.boom", lambda: 1 / 0)
    assert not result.passed
    assert result.detail.startswith("ZeroDivisionError")


def test_setup_errors_become_a_failed_check(log_directory):
    config = {"suites": {"irreps": {"dimensions": None}}}
    report = run_suite("irreps", config, log_directory)
    assert [c.check_id for c in report.checks] == ["irreps.setup"]
    assert not report.passed
    assert os.path.exists(os.path.join(log_directory, ERROR_LOG))


def test_report_json():
    report = SuiteReport("fn", "abc", [CheckResult("fn.a", True), CheckResult("fn.b", False, "no")])
    data = report.to_json()
    assert data["passed"] is False
    assert data["failures"] == 1
    assert report.summary() == "fn: 1/2 checks passed"
