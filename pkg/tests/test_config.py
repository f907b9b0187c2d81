import pytest

from tspread.config import (
    SAMPLE_COUNT,
    UNIVERSE_MAX_N,
    Settings,
    get_config_as_dict,
    load_config,
)
from tspread.errors import ConfigError


def test_defaults_without_pyproject(tmp_path):
    settings = load_config(tmp_path / "missing.toml", environ={})
    assert settings == Settings()
    assert settings.universe_max_n == UNIVERSE_MAX_N
    assert settings.sample_count == SAMPLE_COUNT


def test_pyproject_table_overrides(tmp_path):
    pyproject = tmp_path / "pyproject.toml"
    pyproject.write_text(
        "[project]\nname = 'x'\n\n"
        "[tool.tspread]\nsweep_max_n = 7\nseed = 11\ndebug = true\nunrelated = 'ignored'\n"
    )
    settings = load_config(pyproject, environ={})
    assert settings.sweep_max_n == 7
    assert settings.seed == 11
    assert settings.debug is True
    assert settings.universe_max_n == UNIVERSE_MAX_N


def test_environment_overrides_pyproject(tmp_path):
    pyproject = tmp_path / "pyproject.toml"
    pyproject.write_text("[tool.tspread]\nuniverse_max_n = 4\n")
    environ = {"TSPREAD_MAX_N": "5", "TSPREAD_MAX_UNIVERSE": "64"}
    settings = load_config(pyproject, environ=environ)
    assert settings.universe_max_n == 5
    assert settings.universe_max_size == 64


def test_empty_environment_value_is_ignored(tmp_path):
    settings = load_config(tmp_path / "missing.toml", environ={"TSPREAD_MAX_N": ""})
    assert settings.universe_max_n == UNIVERSE_MAX_N


@pytest.mark.parametrize("value", ["many", "-3"])
def test_malformed_environment_value(tmp_path, value):
    with pytest.raises(ConfigError):
        load_config(tmp_path / "missing.toml", environ={"TSPREAD_MAX_N": value})


def test_malformed_pyproject(tmp_path):
    pyproject = tmp_path / "pyproject.toml"
    pyproject.write_text("[tool.tspread\nseed = 1\n")
    with pytest.raises(ConfigError, match="Could not parse"):
        load_config(pyproject, environ={})
    pyproject.write_text("[tool.tspread]\ndebug = 'perhaps'\n")
    with pytest.raises(ConfigError, match="boolean"):
        load_config(pyproject, environ={})


def test_config_as_dict():
    data = get_config_as_dict(Settings(seed=3))
    assert data["seed"] == 3
    assert set(data) == {
        "sweep_max_n",
        "universe_max_n",
        "universe_max_size",
        "sample_count",
        "seed",
        "debug",
    }
