"""Simulation scenario models."""

from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from ..charts.models import SystemModel


class StateOverride(BaseModel):
    """Parameter shift applied to one state during a phase."""
    model_config = ConfigDict(frozen=True)

    scale: Optional[float] = None
    shape: Optional[float] = None


class Phase(BaseModel):
    """A run of events generated under one parameter regime."""
    model_config = ConfigDict(frozen=True)

    events: int = Field(..., ge=0)
    weights: Optional[List[float]] = Field(
        default=None, description="State selection weights (uniform when omitted)"
    )
    overrides: Dict[str, StateOverride] = Field(default_factory=dict)


class Scenario(BaseModel):
    """System plus the phases of a simulated dataset."""
    model_config = ConfigDict(frozen=True)

    system: SystemModel
    phases: List[Phase] = Field(default_factory=list)
    seed: int = Field(default=0, ge=0, lt=2 ** 64)
