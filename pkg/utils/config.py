#!/usr/bin/env python3
"""
Settings for the dra library and CLI.

Values come from environment variables (optionally through a .env file),
then from the YAML settings file, then from the built-in defaults.
"""

import os
import copy
import logging
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

# Configure logging
logging.basicConfig(
    level=logging.INFO,
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
)
logger = logging.getLogger("dra_config")

DEFAULT_CONFIG_PATH = "config/dra.yaml"

ENV_VARS = {
    "fuel": "DRA_FUEL",
    "radical_bound": "DRA_RADICAL_BOUND",
    "log_dir": "DRA_LOG_DIR",
}

DEFAULT_SETTINGS: Dict[str, Any] = {
    "fuel": 1000000,
    "radical_bound": 64,
    "log_dir": "logs",
    "random_seed": 20240417,
}

DEFAULT_SUITES: Dict[str, Dict[str, Any]] = {
    "relations": {"associativity_trials": 500, "max_exponent": 2},
    "centrality": {},
    "fn": {"max_n": 10, "coefficient_max_n": 12, "congruence_max_n": 8},
    "shapovalov": {"trials": 20, "max_p": 3, "max_power": 6, "zero_weight_size": 5, "radical_orders": [1, 3, 5]},
    "irreps": {"dimensions": [1, 3, 5, 7], "grid_size": 20},
    "tensor": {"windows": [[0, 10], [1, 14], [2, 20]]},
    "ghost": {"max_degree": 2, "odd_n": [1, 3, 5, 7]},
}

INTEGER_SETTINGS = ("fuel", "radical_bound", "random_seed")


def default_configuration() -> Dict[str, Any]:
    return {"settings": copy.deepcopy(DEFAULT_SETTINGS), "suites": copy.deepcopy(DEFAULT_SUITES)}


def config_path() -> str:
    return os.getenv("DRA_CONFIG", DEFAULT_CONFIG_PATH)


def load_environment() -> None:
    """Read a .env file into the process environment, if one exists."""
    load_dotenv()


def load_configuration(path: Optional[str] = None) -> Dict[str, Any]:
    """
    Load settings from YAML, writing the default file first if it is absent.

    Args:
        path: Path to the settings file (default: DRA_CONFIG or config/dra.yaml)

    Returns:
        Dictionary with "settings" and "suites" sections
    """
    path = path or config_path()
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)

    if not os.path.exists(path):
        logger.info(f"Creating default configuration at {path}")
        with open(path, "w") as f:
            yaml.dump(default_configuration(), f, sort_keys=False, indent=2)

    try:
        with open(path, "r") as f:
            loaded = yaml.safe_load(f) or {}
    except Exception as e:
        logger.error(f"Error loading configuration: {str(e)}")
        loaded = {}

    config = default_configuration()
    config["settings"].update(loaded.get("settings") or {})
    for name, params in (loaded.get("suites") or {}).items():
        config["suites"].setdefault(name, {}).update(params or {})
    logger.debug(f"Loaded configuration from {path}")
    return config


def validate_configuration(config: Dict[str, Any]) -> bool:
    """
    Validate a configuration dictionary.

    Returns:
        True if the configuration is valid, False otherwise
    """
    if not config:
        logger.error("Empty configuration")
        return False

    settings = config.get("settings", {})
    for key in INTEGER_SETTINGS:
        if key not in settings:
            continue
        value = settings[key]
        if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
            logger.error(f"Setting {key} must be a positive integer, got {value!r}")
            return False

    unknown = set(config.get("suites", {})) - set(DEFAULT_SUITES)
    if unknown:
        logger.error(f"Unknown suites in configuration: {sorted(unknown)}")
        return False

    return True


def _file_settings() -> Dict[str, Any]:
    path = config_path()
    if not os.path.exists(path):
        return {}
    try:
        with open(path, "r") as f:
            return (yaml.safe_load(f) or {}).get("settings") or {}
    except Exception as e:
        logger.error(f"Error reading settings from {path}: {str(e)}")
        return {}


def get_setting(name: str) -> Any:
    """Environment value, else the settings file, else the built-in default."""
    if name not in DEFAULT_SETTINGS:
        raise KeyError(f"unknown setting {name!r}")
    raw = os.getenv(ENV_VARS[name]) if name in ENV_VARS else None
    if raw:
        if name not in INTEGER_SETTINGS:
            return raw
        try:
            value = int(raw)
            if value > 0:
                return value
        except ValueError:
            pass
        logger.warning(f"Ignoring invalid {ENV_VARS[name]}={raw!r}")
    value = _file_settings().get(name)
    if value is None:
        return DEFAULT_SETTINGS[name]
    if name in INTEGER_SETTINGS and (not isinstance(value, int) or isinstance(value, bool) or value <= 0):
        logger.warning(f"Ignoring invalid {name}={value!r} in {config_path()}")
        return DEFAULT_SETTINGS[name]
    return value


def suite_parameters(name: str, config: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
    params = copy.deepcopy(DEFAULT_SUITES.get(name, {}))
    if config:
        params.update(config.get("suites", {}).get(name) or {})
    return params
