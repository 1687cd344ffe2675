"""Chart data models: system definition, observations and classified points."""

from enum import Enum
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from ..distributions import DistributionSpec
from .acl import DEFAULT_FALSE_ALARM, AngularLimits, LimitTimes
from .scales import DEFAULT_SCALE, DrawingScale

# Key of the whole-system entry in median split reports
OVERALL_LABEL = "overall"


class ChartDesign(str, Enum):
    """Standard: one set of straight ACLs. Generalized: per-state zigzag ACLs."""
    STANDARD = "standard"
    GENERALIZED = "generalized"


class Status(str, Enum):
    """Control status of one observation point."""
    DEGRADATION = "degradation"    # theta > theta_L
    IN_CONTROL = "in_control"
    IMPROVEMENT = "improvement"    # theta < theta_U

    @property
    def out_of_control(self) -> bool:
        return self is not Status.IN_CONTROL


class CenterSide(str, Enum):
    """Position relative to the 45 degree center line."""
    ABOVE = "above"
    BELOW = "below"
    ON = "on"


class StateTransition(BaseModel):
    """State transition S_n and its TTF distribution."""
    model_config = ConfigDict(frozen=True)

    label: str = Field(..., min_length=1)
    spec: DistributionSpec


class SystemModel(BaseModel):
    """Fully repairable multi-state system with major failures only."""
    model_config = ConfigDict(frozen=True)

    states: List[StateTransition]
    c: float = Field(default=DEFAULT_FALSE_ALARM, gt=0.0, lt=1.0)
    scale: DrawingScale = DEFAULT_SCALE

    @model_validator(mode='after')
    def _check_states(self) -> "SystemModel":
        if not self.states:
            raise ValueError("system needs at least one state transition")
        labels = [state.label for state in self.states]
        duplicates = sorted({label for label in labels if labels.count(label) > 1})
        if duplicates:
            raise ValueError(f"duplicate state labels: {', '.join(duplicates)}")
        if OVERALL_LABEL in labels:
            raise ValueError(f"state label '{OVERALL_LABEL}' is reserved for the whole-system summary")
        return self

    @property
    def labels(self) -> List[str]:
        return [state.label for state in self.states]

    def resolve_state(self, ref: Union[str, int]) -> Optional[int]:
        """
        1-based index for a state label or index reference.

        Labels win when a reference could be read both ways.
        """
        text = str(ref).strip()
        for index, state in enumerate(self.states, start=1):
            if state.label == text:
                return index
        if text.isdigit() and 1 <= int(text) <= len(self.states):
            return int(text)
        return None

    def replace(self, **changes) -> "SystemModel":
        """Copy with some fields replaced."""
        data: Dict = {'states': self.states, 'c': self.c, 'scale': self.scale}
        data.update(changes)
        return SystemModel(**data)


class Observation(BaseModel):
    """One observed time-to-failure."""
    model_config = ConfigDict(frozen=True)

    seq: int = Field(..., ge=1)
    state_index: int = Field(..., ge=1)
    ttf: float = Field(..., ge=0.0)


class ClassifiedPoint(BaseModel):
    """Observation with its angle and control status."""
    model_config = ConfigDict(frozen=True)

    observation: Observation
    state_label: str
    t_c: float
    theta: float
    status: Status
    above_center: CenterSide


class StateLimits(BaseModel):
    """Limits of one state line: t-chart times and angles."""
    model_config = ConfigDict(frozen=True)

    index: int
    label: str
    spec: DistributionSpec
    times: LimitTimes
    limits: AngularLimits


class MedianSplit(BaseModel):
    """Points above / below / on the center line."""
    above: int = 0
    below: int = 0
    on: int = 0

    @property
    def total(self) -> int:
        return self.above + self.below + self.on


class StateSummary(BaseModel):
    """Per-state overview used in reports."""
    index: int
    label: str
    distribution: str
    T_L: float
    T_C: float
    T_U: float
    theta_U: float
    theta_C: float
    theta_L: float
    points: int
    improvement: int
    degradation: int
    split: MedianSplit


class Chart(BaseModel):
    """Built angular control chart."""
    model_config = ConfigDict(frozen=True)

    system: SystemModel
    design: ChartDesign
    states: List[StateLimits]
    points: List[ClassifiedPoint] = Field(default_factory=list)

    @field_validator('states')
    @classmethod
    def _non_empty(cls, value: List[StateLimits]) -> List[StateLimits]:
        if not value:
            raise ValueError("chart needs at least one state line")
        return value

    @property
    def state_lines(self) -> List[StateLimits]:
        """State lines in ascending order of median TTF (bottom to top)."""
        return sorted(self.states, key=lambda state: (state.times.center, state.index))

    @property
    def out_of_control(self) -> List[ClassifiedPoint]:
        return [point for point in self.points if point.status.out_of_control]
