#!/usr/bin/env python3
"""
Structured run logs for the verification suites.

Each suite run, each check inside it, and each error are appended as JSON
lines to files in the log directory, so runs can be compared over time.
"""

import os
import json
import time
import uuid
import logging
from datetime import datetime
from typing import Any, Dict, List, Optional

from utils.config import get_setting

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger("dra_run_logger")

SUITE_LOG = "suite_runs.jsonl"
CHECK_LOG = "check_results.jsonl"
ERROR_LOG = "error_log.jsonl"


def log_dir() -> str:
    return get_setting("log_dir")


def _log_path(name: str, directory: Optional[str] = None) -> str:
    directory = directory or log_dir()
    os.makedirs(directory, exist_ok=True)
    return os.path.join(directory, name)


def _append(name: str, entry: Dict[str, Any], directory: Optional[str] = None) -> None:
    try:
        with open(_log_path(name, directory), 'a') as f:
            f.write(json.dumps(entry) + "\n")
    except Exception as e:
        logger.error(f"Failed to write {name}: {e}")


def generate_run_id() -> str:
    """Generate a unique ID for each suite run."""
    return str(uuid.uuid4())


def log_suite_run(
    run_id: str,
    suite: str,
    check_count: int,
    failures: int,
    elapsed: float,
    directory: Optional[str] = None
) -> None:
    """
    Record a finished suite run.

    Args:
        run_id: ID returned by generate_run_id
        suite: Suite name
        check_count: Number of checks executed
        failures: Number of failed checks
        elapsed: Wall time in seconds
    """
    _append(SUITE_LOG, {
        "run_id": run_id,
        "timestamp": datetime.now().isoformat(),
        "suite": suite,
        "check_count": check_count,
        "failures": failures,
        "elapsed_ms": int(elapsed * 1000),
    }, directory)


def log_check(
    run_id: str,
    check_id: str,
    passed: bool,
    detail: str = "",
    elapsed: float = 0.0,
    directory: Optional[str] = None
) -> None:
    _append(CHECK_LOG, {
        "run_id": run_id,
        "timestamp": datetime.now().isoformat(),
        "check_id": check_id,
        "passed": passed,
        "detail": detail,
        "elapsed_ms": int(elapsed * 1000),
    }, directory)


def log_error(
    run_id: str,
    error_type: str,
    error_message: str,
    stack_trace: Optional[str] = None,
    directory: Optional[str] = None
) -> None:
    """
    Log an error raised while running a suite or a CLI command.

    Args:
        run_id: The run the error belongs to
        error_type: Exception class name
        error_message: Error message
        stack_trace: Optional stack trace
    """
    entry = {
        "run_id": run_id,
        "timestamp": datetime.now().isoformat(),
        "error_type": error_type,
        "error_message": error_message,
    }
    if stack_trace:
        entry["stack_trace"] = stack_trace
    _append(ERROR_LOG, entry, directory)


class SuiteLogger:
    """Times a suite run and records its checks."""

    def __init__(self, suite: str, directory: Optional[str] = None):
        self.suite = suite
        self.directory = directory
        self.run_id = generate_run_id()
        self.start_time = time.time()
        self.check_count = 0
        self.failures = 0

    def record(self, check_id: str, passed: bool, detail: str = "", elapsed: float = 0.0) -> None:
        self.check_count += 1
        if not passed:
            self.failures += 1
        log_check(self.run_id, check_id, passed, detail, elapsed, self.directory)

    def log_error(self, error_type: str, error_message: str, stack_trace: Optional[str] = None) -> None:
        log_error(self.run_id, error_type, error_message, stack_trace, self.directory)

    def finish(self) -> float:
        """Write the run summary and return the elapsed seconds."""
        elapsed = time.time() - self.start_time
        log_suite_run(self.run_id, self.suite, self.check_count, self.failures, elapsed, self.directory)
        logger.info(f"suite {self.suite}: {self.check_count - self.failures}/{self.check_count} passed")
        return elapsed


def _read(name: str, directory: Optional[str] = None) -> List[Dict[str, Any]]:
    path = os.path.join(directory or log_dir(), name)
    entries = []
    if not os.path.exists(path):
        return entries
    try:
        with open(path, 'r') as f:
            for line in f:
                try:
                    entries.append(json.loads(line.strip()))
                except json.JSONDecodeError:
                    continue
    except Exception as e:
        logger.error(f"Error reading {name}: {e}")
    return entries


def get_recent_runs(limit: int = 10, directory: Optional[str] = None) -> List[Dict[str, Any]]:
    """
    Get the most recent suite runs, newest first.

    Args:
        limit: Maximum number of runs to return
    """
    runs = _read(SUITE_LOG, directory)
    runs.sort(key=lambda x: x.get("timestamp", ""), reverse=True)
    return runs[:limit]


def get_suite_metrics(days: int = 7, directory: Optional[str] = None) -> Dict[str, Any]:
    """
    Aggregate suite runs from the last `days` days.

    Returns:
        Dictionary with run counts, failure rate, mean duration and error count
    """
    metrics = {
        "total_runs": 0,
        "failed_runs": 0,
        "avg_elapsed_ms": 0,
        "total_checks": 0,
        "error_count": 0,
    }
    cutoff = datetime.now().replace(hour=0, minute=0, second=0, microsecond=0).timestamp() - days * 24 * 60 * 60

    def recent(entries: List[Dict[str, Any]]) -> List[Dict[str, Any]]:
        kept = []
        for entry in entries:
            try:
                if datetime.fromisoformat(entry.get("timestamp", "")).timestamp() >= cutoff:
                    kept.append(entry)
            except ValueError:
                continue
        return kept

    runs = recent(_read(SUITE_LOG, directory))
    metrics["error_count"] = len(recent(_read(ERROR_LOG, directory)))
    if runs:
        metrics["total_runs"] = len(runs)
        metrics["failed_runs"] = sum(1 for r in runs if r.get("failures", 0))
        metrics["avg_elapsed_ms"] = sum(r.get("elapsed_ms", 0) for r in runs) / len(runs)
        metrics["total_checks"] = sum(r.get("check_count", 0) for r in runs)
    return metrics


if __name__ == "__main__":
    run = SuiteLogger("demo")
    run.record("demo.check", True, "ok")
    run.finish()
    print(get_suite_metrics(days=1))
