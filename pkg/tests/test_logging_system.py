#!/usr/bin/env python3
"""
Tests for the JSONL run logs.
"""

import os
import sys
import json
from datetime import datetime, timedelta

import pytest

# Add the parent directory to sys.path
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from utils.logging_system import (
    CHECK_LOG,
    ERROR_LOG,
    SUITE_LOG,
    SuiteLogger,
    generate_run_id,
    get_recent_runs,
    get_suite_metrics,
    log_error,
    log_suite_run,
)


@pytest.fixture
def log_directory(tmp_path):
    return str(tmp_path / "logs")


def _lines(directory, name):
    with open(os.path.join(directory, name)) as f:
        return [json.loads(line) for line in f]


def test_run_ids_are_unique():
    assert generate_run_id() != generate_run_id()


def test_suite_logger_writes_checks_and_summary(log_directory):
    run = SuiteLogger("fn", log_directory)
    run.record("fn.agreement.01", True, "ok", 0.25)
    run.record("fn.agreement.02", False, "mismatch")
    elapsed = run.finish()

    checks = _lines(log_directory, CHECK_LOG)
    assert [c["check_id"] for c in checks] == ["fn.agreement.01", "fn.agreement.02"]
    assert checks[0]["elapsed_ms"] == 250
    assert {c["run_id"] for c in checks} == {run.run_id}

    (summary,) = _lines(log_directory, SUITE_LOG)
    assert summary["suite"] == "fn"
    assert summary["check_count"] == 2
    assert summary["failures"] == 1
    assert elapsed >= 0


def test_errors_are_logged_with_stack_trace(log_directory):
    run = SuiteLogger("ghost", log_directory)
    run.log_error("NotPolynomial", "ghost.hc.c1: denominator", "Traceback ...")
    log_error("cli", "ValueError", "bad input", directory=log_directory)
    errors = _lines(log_directory, ERROR_LOG)
    assert errors[0]["stack_trace"] == "Traceback ..."
    assert "stack_trace" not in errors[1]


def test_recent_runs_are_newest_first(log_directory):
    for suite in ("relations", "fn", "tensor"):
        log_suite_run(generate_run_id(), suite, 3, 0, 0.1, log_directory)
    runs = get_recent_runs(limit=2, directory=log_directory)
    assert len(runs) == 2
    assert runs[0]["timestamp"] >= runs[1]["timestamp"]


def test_metrics(log_directory):
    log_suite_run("a", "fn", 10, 0, 1.0, log_directory)
    log_suite_run("b", "fn", 6, 2, 3.0, log_directory)
    log_error("b", "ShapeMismatch", "boom", directory=log_directory)
    stale = {
        "run_id": "old",
        "timestamp": (datetime.now() - timedelta(days=30)).isoformat(),
        "suite": "fn",
        "check_count": 99,
        "failures": 9,
        "elapsed_ms": 1,
    }
    with open(os.path.join(log_directory, SUITE_LOG), "a") as f:
        f.write(json.dumps(stale) + "\n")
        f.write("not json\n")

    metrics = get_suite_metrics(days=7, directory=log_directory)
    assert metrics["total_runs"] == 2
    assert metrics["failed_runs"] == 1
    assert metrics["total_checks"] == 16
    assert metrics["avg_elapsed_ms"] == 2000
    assert metrics["error_count"] == 1


def test_metrics_without_logs(log_directory):
    assert get_suite_metrics(directory=log_directory)["total_runs"] == 0
    assert get_recent_runs(directory=log_directory) == []


def test_default_directory_comes_from_settings(tmp_path, monkeypatch):
    monkeypatch.setenv("DRA_LOG_DIR", str(tmp_path / "from-env"))
    log_suite_run("x", "centrality", 1, 0, 0.0)
    assert os.path.exists(tmp_path / "from-env" / SUITE_LOG)
