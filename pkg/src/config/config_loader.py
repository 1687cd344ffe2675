"""Configuration loader for YAML system definitions."""

import yaml
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError

from ..charts.chart import resolve_design
from ..charts.models import ChartDesign, StateTransition, SystemModel
from ..charts.scales import DrawingScale, ScaleError
from ..distributions import DistributionFamily, DistributionSpec
from ..errors import ACCError
from ..rendering import RenderOptions
from ..simulation import Phase, Scenario


class ConfigError(ACCError):
    """Configuration file cannot be read or validated."""
    pass


class ChartSection(BaseModel):
    false_alarm: float = Field(default=0.0027, gt=0.0, lt=1.0)
    scale: str = "cbrt"
    design: str = "auto"


class StateSection(BaseModel):
    label: str
    family: DistributionFamily
    scale: float
    shape: Optional[float] = None


class RenderSection(BaseModel):
    width: int = 900
    height: int = 600
    margin: int = 60
    marker_radius: float = 4.0
    coincidence_offset: float = 6.0
    title: Optional[str] = None


class SimulationSection(BaseModel):
    seed: int = Field(default=0, ge=0, lt=2 ** 64)
    phases: List[Phase] = Field(default_factory=list)


class SystemConfig(BaseModel):
    """Validated configuration document."""
    chart: ChartSection = Field(default_factory=ChartSection)
    states: List[StateSection]
    render: RenderSection = Field(default_factory=RenderSection)
    simulation: SimulationSection = Field(default_factory=SimulationSection)

    def to_system(self) -> SystemModel:
        states = [
            StateTransition(
                label=s.label,
                spec=DistributionSpec(family=s.family, scale=s.scale, shape=s.shape),
            )
            for s in self.states
        ]
        return SystemModel(
            states=states,
            c=self.chart.false_alarm,
            scale=DrawingScale.from_name(self.chart.scale),
        )

    def design_for(self, system: SystemModel) -> ChartDesign:
        return resolve_design(system, self.chart.design)

    def render_options(self) -> RenderOptions:
        return RenderOptions(**self.render.model_dump())

    def scenario(self, seed: Optional[int] = None) -> Scenario:
        return Scenario(
            system=self.to_system(),
            phases=self.simulation.phases,
            seed=self.simulation.seed if seed is None else seed,
        )


class ConfigLoader:
    """Load and manage a YAML system configuration."""

    def __init__(self, config_path: str = "config.yaml"):
        self.config_path = Path(config_path)
        self._config: Dict[str, Any] = {}
        self._root: Optional[yaml.Node] = None
        self.load()

    def load(self) -> None:
        """Load configuration from YAML file."""
        if not self.config_path.exists():
            raise ConfigError(f"Configuration file not found: {self.config_path}")

        try:
            with open(self.config_path, 'r', encoding='utf-8') as f:
                text = f.read()
            self._root = yaml.compose(text)
            self._config = yaml.safe_load(text) or {}
        except yaml.YAMLError as e:
            mark = getattr(e, 'problem_mark', None)
            where = f", line {mark.line + 1}" if mark is not None else ""
            raise ConfigError(f"{self.config_path}{where}: invalid YAML ({e})") from e

        if not isinstance(self._config, dict):
            raise ConfigError(f"{self.config_path}: top level must be a mapping")

    def get(self, key: str, default: Any = None) -> Any:
        """Get configuration value by key (supports nested keys with dots)."""
        keys = key.split('.')
        value = self._config

        for k in keys:
            if isinstance(value, dict):
                value = value.get(k)
                if value is None:
                    return default
            else:
                return default

        return value

    def _line_of(self, loc: Tuple) -> Optional[int]:
        """1-based line of the deepest YAML node found along a validation path."""
        node = self._root
        line = None
        for part in loc:
            if node is None:
                break
            line = node.start_mark.line + 1
            if isinstance(node, yaml.MappingNode):
                node = next((v for k, v in node.value if k.value == part), None)
            elif isinstance(node, yaml.SequenceNode) and isinstance(part, int) and part < len(node.value):
                node = node.value[part]
            else:
                node = None
        if node is not None:
            line = node.start_mark.line + 1
        return line

    def system_config(self) -> SystemConfig:
        """
        Validate the document.

        Raises:
            ConfigError: schema or parameter problem, with the line number
                when it can be located
        """
        try:
            config = SystemConfig(**self._config)
        except ValidationError as e:
            first = e.errors()[0]
            line = self._line_of(tuple(first['loc']))
            where = f", line {line}" if line else ""
            location = ".".join(str(part) for part in first['loc'])
            raise ConfigError(f"{self.config_path}{where}: {location}: {first['msg']}") from e

        # Distribution and scale checks happen when the system is built
        for index, state in enumerate(config.states):
            try:
                DistributionSpec(family=state.family, scale=state.scale, shape=state.shape)
            except ValidationError as e:
                line = self._line_of(('states', index))
                where = f", line {line}" if line else ""
                raise ConfigError(
                    f"{self.config_path}{where}: state {state.label}: {e.errors()[0]['msg']}"
                ) from e
        try:
            config.to_system()
        except ScaleError as e:
            line = self._line_of(('chart', 'scale'))
            raise ConfigError(f"{self.config_path}, line {line}: {e}") from e
        except ValidationError as e:
            raise ConfigError(f"{self.config_path}: {e.errors()[0]['msg']}") from e

        return config


# Global config instance
_config_instance: Optional[ConfigLoader] = None


def get_config(config_path: Optional[str] = None) -> ConfigLoader:
    """Get or create config instance (a new path replaces the cached one)."""
    global _config_instance
    if _config_instance is None or (config_path and Path(config_path) != _config_instance.config_path):
        if config_path is None:
            from .settings import get_settings
            config_path = get_settings().config_path
        _config_instance = ConfigLoader(config_path)
    return _config_instance
