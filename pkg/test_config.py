"""Tests for settings and the YAML configuration loader."""

from pathlib import Path

import pytest
from pydantic import ValidationError

from src.charts import DEFAULT_SCALE, ChartDesign
from src.config import ConfigError, ConfigLoader, Settings, get_config, get_settings
from src.distributions import DistributionFamily

DATA_DIR = Path(__file__).parent / "data"
EXAMPLE1 = str(DATA_DIR / "example1.yaml")
EXAMPLE3 = str(DATA_DIR / "example3.yaml")

MINIMAL = """\
chart:
  scale: sqrt
states:
  - label: A
    family: weibull
    scale: 10
    shape: 2
"""


def write(tmp_path, text, name="config.yaml"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


# ---------------------------------------------------------------------------
# Settings
# ---------------------------------------------------------------------------

def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("ACC_WORKERS", "4")
    monkeypatch.setenv("ACC_LOG_LEVEL", "debug")
    settings = Settings()
    assert settings.workers == 4
    assert settings.log_level == "DEBUG"
    assert settings.log_file is None


def test_settings_reject_unknown_level(monkeypatch):
    monkeypatch.setenv("ACC_LOG_LEVEL", "chatty")
    with pytest.raises(ValidationError):
        Settings()


def test_settings_reject_zero_workers(monkeypatch):
    monkeypatch.setenv("ACC_WORKERS", "0")
    with pytest.raises(ValidationError):
        Settings()


def test_get_settings_is_cached():
    assert get_settings() is get_settings()


# ---------------------------------------------------------------------------
# Loader
# ---------------------------------------------------------------------------

def test_example1_config():
    loader = ConfigLoader(EXAMPLE1)
    config = loader.system_config()
    system = config.to_system()
    assert system.labels == ["S1", "S2", "S3"]
    assert system.c == 0.0027
    assert system.scale == DEFAULT_SCALE
    assert config.design_for(system) is ChartDesign.STANDARD
    assert loader.get("chart.scale") == "cbrt"
    assert loader.get("chart.missing", "fallback") == "fallback"


def test_example3_config():
    config = ConfigLoader(EXAMPLE3).system_config()
    system = config.to_system()
    assert [s.spec.family for s in system.states] == [
        DistributionFamily.GAMMA, DistributionFamily.RAYLEIGH, DistributionFamily.WEIBULL, DistributionFamily.WEIBULL,
    ]
    assert system.states[1].spec.shape == 2.0
    assert config.design_for(system) is ChartDesign.GENERALIZED


def test_render_options_and_scenario():
    config = ConfigLoader(EXAMPLE1).system_config()
    options = config.render_options()
    assert (options.width, options.height, options.margin) == (900, 600, 60)
    scenario = config.scenario()
    assert scenario.seed == 2022
    assert [p.events for p in scenario.phases] == [25, 25]
    assert scenario.phases[1].overrides['S1'].scale == 400
    assert config.scenario(seed=5).seed == 5


def test_defaults_fill_missing_sections(tmp_path):
    config = ConfigLoader(str(write(tmp_path, MINIMAL))).system_config()
    assert config.chart.false_alarm == 0.0027
    assert config.chart.design == "auto"
    assert config.to_system().scale.name == "sqrt"
    assert config.simulation.phases == []


def test_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="not found"):
        ConfigLoader(str(tmp_path / "nope.yaml"))


def test_invalid_yaml_reports_line(tmp_path):
    path = write(tmp_path, "chart:\n  scale: cbrt\n  design: [auto\nstates: []\n")
    with pytest.raises(ConfigError, match="line"):
        ConfigLoader(str(path))


def test_unknown_family_reports_line(tmp_path):
    text = MINIMAL + "  - label: B\n    family: pareto\n    scale: 3\n"
    with pytest.raises(ConfigError, match=r"line 9: states\.1\.family"):
        ConfigLoader(str(write(tmp_path, text))).system_config()


def test_bad_distribution_parameters_name_the_state(tmp_path):
    text = MINIMAL + "  - label: B\n    family: rayleigh\n    scale: 3\n    shape: 3\n"
    with pytest.raises(ConfigError, match="line 8: state B"):
        ConfigLoader(str(write(tmp_path, text))).system_config()


def test_unknown_scale_reports_line(tmp_path):
    with pytest.raises(ConfigError, match="line 2.*log"):
        ConfigLoader(str(write(tmp_path, MINIMAL.replace("sqrt", "log")))).system_config()


def test_false_alarm_out_of_range(tmp_path):
    text = MINIMAL.replace("chart:\n", "chart:\n  false_alarm: 1.5\n")
    with pytest.raises(ConfigError, match="false_alarm"):
        ConfigLoader(str(write(tmp_path, text))).system_config()


def test_missing_states(tmp_path):
    with pytest.raises(ConfigError, match="states"):
        ConfigLoader(str(write(tmp_path, "chart:\n  scale: cbrt\n"))).system_config()


def test_duplicate_labels(tmp_path):
    text = MINIMAL + "  - label: A\n    family: exponential\n    scale: 3\n"
    with pytest.raises(ConfigError, match="duplicate"):
        ConfigLoader(str(write(tmp_path, text))).system_config()


def test_get_config_replaces_cached_path(tmp_path):
    first = get_config(EXAMPLE1)
    assert get_config() is first
    second = get_config(str(write(tmp_path, MINIMAL)))
    assert second is not first
