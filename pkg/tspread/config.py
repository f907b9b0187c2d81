#!/usr/bin/env python3
"""
Configuration module for the t-spread toolkit.

Sensible defaults live here as module constants. They can be overridden by a
``[tool.tspread]`` table in pyproject.toml and, for the oracle size guards, by
the ``TSPREAD_MAX_N`` / ``TSPREAD_MAX_UNIVERSE`` environment variables.
"""

import os
from dataclasses import asdict, dataclass, replace
from functools import lru_cache
from pathlib import Path

import tomli

from tspread.errors import ConfigError

# Largest n swept by `tspread verify` unless --max-n is given
SWEEP_MAX_N = 9

# brute_kk_universe refuses ambient sizes above this
UNIVERSE_MAX_N = 6

# enumerate_strongly_stable_sets refuses |M_{n,d,t}| above this
UNIVERSE_MAX_SIZE = 40

# Randomized sweeps
SAMPLE_COUNT = 200
SEED = 2019

# Debug settings
DEBUG = False

PYPROJECT_TABLE = "tspread"

ENV_OVERRIDES = {
    "TSPREAD_MAX_N": "universe_max_n",
    "TSPREAD_MAX_UNIVERSE": "universe_max_size",
}


@dataclass(frozen=True)
class Settings:
    sweep_max_n: int = SWEEP_MAX_N
    universe_max_n: int = UNIVERSE_MAX_N
    universe_max_size: int = UNIVERSE_MAX_SIZE
    sample_count: int = SAMPLE_COUNT
    seed: int = SEED
    debug: bool = DEBUG


def find_pyproject():
    """Locate pyproject.toml in the working directory or next to the package."""
    candidates = [
        Path("pyproject.toml"),
        Path(__file__).parent.parent / "pyproject.toml",
    ]
    for path in candidates:
        if path.exists():
            return path
    return None


def _coerce(key, value):
    expected = type(getattr(Settings(), key))
    if expected is bool:
        if isinstance(value, bool):
            return value
        if str(value).lower() in ("1", "true", "yes", "on"):
            return True
        if str(value).lower() in ("0", "false", "no", "off"):
            return False
        raise ConfigError(f"{key} must be a boolean, got {value!r}")
    try:
        number = int(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{key} must be an integer, got {value!r}") from None
    if number < 0:
        raise ConfigError(f"{key} must be nonnegative, got {number}")
    return number


def load_config(pyproject_path=None, environ=None):
    """
    Load configuration from pyproject.toml and the environment.

    Args:
        pyproject_path: Explicit pyproject.toml to read (default: search)
        environ: Mapping used instead of os.environ (default: os.environ)

    Returns:
        Settings: Defaults overlaid with [tool.tspread] and env overrides
    """
    settings = Settings()
    path = Path(pyproject_path) if pyproject_path else find_pyproject()

    if path is not None and path.exists():
        with open(path, "rb") as f:
            try:
                pyproject = tomli.load(f)
            except tomli.TOMLDecodeError as e:
                raise ConfigError(f"Could not parse {path}: {e}") from e
        table = pyproject.get("tool", {}).get(PYPROJECT_TABLE, {})
        known = {k: _coerce(k, v) for k, v in table.items() if hasattr(settings, k)}
        settings = replace(settings, **known)

    environ = os.environ if environ is None else environ
    for variable, key in ENV_OVERRIDES.items():
        if environ.get(variable):
            settings = replace(settings, **{key: _coerce(key, environ[variable])})

    return settings


@lru_cache(maxsize=1)
def get_settings():
    """Settings for this process (loaded once)."""
    return load_config()


def get_config_as_dict(settings=None):
    """
    Get all configuration as a dictionary.
    Useful for reports and JSON output.
    """
    return asdict(settings or get_settings())


# If this module is run directly, show the effective configuration
if __name__ == "__main__":
    for key, value in get_config_as_dict().items():
        print(f"- {key}: {value}")
