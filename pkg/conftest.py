"""Shared pytest fixtures."""

import logging
import sys
from pathlib import Path

import pytest

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.charts import DEFAULT_SCALE, StateTransition, SystemModel
from src.config import config_loader, settings as settings_module
from src.distributions import DistributionSpec
from src.processing import read_observations

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_DIR = DATA_DIR / "golden"


@pytest.fixture(autouse=True)
def isolated_settings(monkeypatch, tmp_path):
    """No log file, output under tmp_path, fresh cached settings and config."""
    monkeypatch.setenv("ACC_LOG_FILE", "")
    monkeypatch.setenv("ACC_OUTPUT_DIR", str(tmp_path / "output"))
    monkeypatch.setenv("ACC_CONFIG_PATH", str(DATA_DIR / "example1.yaml"))
    monkeypatch.setattr(settings_module, "settings", None)
    monkeypatch.setattr(config_loader, "_config_instance", None)
    yield
    # Handlers hold the captured stderr of this test
    logging.getLogger("acc").handlers.clear()


def spec(family: str, scale: float, shape=None) -> DistributionSpec:
    return DistributionSpec(family=family, scale=scale, shape=shape)


@pytest.fixture
def example1_system() -> SystemModel:
    return SystemModel(states=[
        StateTransition(label="S1", spec=spec("exponential", 100)),
        StateTransition(label="S2", spec=spec("exponential", 400)),
        StateTransition(label="S3", spec=spec("exponential", 800)),
    ], scale=DEFAULT_SCALE)


@pytest.fixture
def example3_system() -> SystemModel:
    return SystemModel(states=[
        StateTransition(label="S1", spec=spec("gamma", 100, 1.0)),
        StateTransition(label="S2", spec=spec("rayleigh", 200)),
        StateTransition(label="S3", spec=spec("weibull", 600, 1.5)),
        StateTransition(label="S4", spec=spec("weibull", 1000, 2.0)),
    ], scale=DEFAULT_SCALE)


@pytest.fixture
def example1_observations(example1_system):
    return read_observations(DATA_DIR / "example1.csv", example1_system)


@pytest.fixture
def example2_observations(example1_system):
    return read_observations(DATA_DIR / "example2.csv", example1_system)


@pytest.fixture
def example3_observations(example3_system):
    return read_observations(DATA_DIR / "example3.csv", example3_system)


@pytest.fixture
def golden(tmp_path):
    """
    Exact comparison against data/golden/<name>.

    A missing or different golden fails; the rendered text is written under
    tmp_path so it can be inspected and, when intended, copied over.
    """
    def compare(name: str, text: str) -> None:
        path = GOLDEN_DIR / name
        candidate = tmp_path / "golden" / name
        candidate.parent.mkdir(parents=True, exist_ok=True)
        candidate.write_text(text, encoding="utf-8", newline="")
        if not path.exists():
            pytest.fail(f"golden file {path} is missing; rendered output is in {candidate}")
        assert path.read_text(encoding="utf-8") == text, f"differs from {path}; rendered output is in {candidate}"
    return compare
