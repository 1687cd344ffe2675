"""Pydantic models for state-transition lifetime distributions."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ..errors import ACCError


class DistributionError(ACCError, ValueError):
    """Invalid distribution parameters or probability outside (0, 1)."""
    pass


class DistributionFamily(str, Enum):
    """Supported non-negative continuous lifetime distributions."""
    EXPONENTIAL = "exponential"
    WEIBULL = "weibull"
    RAYLEIGH = "rayleigh"
    LOGNORMAL = "lognormal"
    FRECHET = "frechet"
    GAMMA = "gamma"
    ERLANG = "erlang"

    @property
    def has_shape(self) -> bool:
        return self is not DistributionFamily.EXPONENTIAL

    @property
    def base(self) -> "DistributionFamily":
        """Family whose formulas are used (Rayleigh -> Weibull, Erlang -> Gamma)."""
        if self is DistributionFamily.RAYLEIGH:
            return DistributionFamily.WEIBULL
        if self is DistributionFamily.ERLANG:
            return DistributionFamily.GAMMA
        return self


RAYLEIGH_SHAPE = 2.0


class DistributionSpec(BaseModel):
    """
    Time-to-failure law of one state transition.

    ``scale`` is alpha and ``shape`` is beta. For the lognormal family alpha
    is the mean of the underlying normal (any real) and beta its standard
    deviation.
    """
    model_config = ConfigDict(frozen=True)

    family: DistributionFamily
    scale: float = Field(..., description="alpha")
    shape: Optional[float] = Field(default=None, description="beta")

    @model_validator(mode='before')
    @classmethod
    def _rayleigh_default_shape(cls, data):
        if isinstance(data, dict) and data.get('shape') is None:
            family = data.get('family')
            if family in (DistributionFamily.RAYLEIGH, DistributionFamily.RAYLEIGH.value):
                return {**data, 'shape': RAYLEIGH_SHAPE}
        return data

    @model_validator(mode='after')
    def _check_parameters(self) -> "DistributionSpec":
        family = self.family

        if family is not DistributionFamily.LOGNORMAL and not self.scale > 0:
            raise ValueError(f"{family.value}: scale must be > 0, got {self.scale}")

        if family is DistributionFamily.EXPONENTIAL:
            if self.shape is not None:
                raise ValueError("exponential: no shape parameter")
            return self

        if family is DistributionFamily.RAYLEIGH:
            if self.shape != RAYLEIGH_SHAPE:
                raise ValueError(f"rayleigh: shape is fixed to 2, got {self.shape}")
            return self

        if self.shape is None:
            raise ValueError(f"{family.value}: shape parameter required")
        if not self.shape > 0:
            raise ValueError(f"{family.value}: shape must be > 0, got {self.shape}")
        if family is DistributionFamily.ERLANG and float(self.shape) != int(self.shape):
            raise ValueError(f"erlang: shape must be a positive integer, got {self.shape}")

        return self

    @property
    def shape_or_one(self) -> float:
        """Shape with the exponential treated as beta = 1."""
        return 1.0 if self.shape is None else float(self.shape)

    @property
    def label(self) -> str:
        """Short human-readable description."""
        if self.family is DistributionFamily.EXPONENTIAL:
            return f"Exponential(alpha={self.scale:g})"
        return f"{self.family.value.capitalize()}(alpha={self.scale:g}, beta={self.shape:g})"
