"""Drawing scales applied to both chart axes."""

import math
from typing import Iterable, Protocol, Tuple

from pydantic import BaseModel, ConfigDict, Field

from ..distributions import DistributionSpec, quantile, ratio_of_quantiles
from ..errors import ACCError


class ScaleError(ACCError, ValueError):
    """Invalid drawing scale or abscissa."""
    pass


class AxisMapping(Protocol):
    """Anything that maps a non-negative axis value."""

    def apply(self, x: float) -> float:
        ...


SCALE_NAMES = {
    'linear': 1,
    'sqrt': 2,
    'cbrt': 3,
    'qrt': 4,
}


class DrawingScale(BaseModel):
    """
    Power-root mapping g(x) = x^(1/k).

    Only power roots can be built, so g(x/y) = g(x)/g(y) always holds and
    the angular limits stay free of the distributions' scale parameters.
    """
    model_config = ConfigDict(frozen=True)

    root: int = Field(default=1, ge=1)

    @classmethod
    def from_name(cls, name: str) -> "DrawingScale":
        """Build from a config name: linear | sqrt | cbrt | qrt."""
        try:
            return cls(root=SCALE_NAMES[name.strip().lower()])
        except KeyError:
            raise ScaleError(
                f"Unknown drawing scale '{name}' (expected one of {', '.join(SCALE_NAMES)})"
            ) from None

    @property
    def name(self) -> str:
        for name, root in SCALE_NAMES.items():
            if root == self.root:
                return name
        return f"root{self.root}"

    def apply(self, x: float) -> float:
        """
        Map an axis value.

        Args:
            x: Non-negative value (0 maps to 0)

        Returns:
            x^(1/k)

        Raises:
            ScaleError: x is negative
        """
        if x < 0:
            raise ScaleError(f"drawing scale is defined for x >= 0, got {x}")
        if self.root == 1:
            return float(x)
        return float(x) ** (1.0 / self.root)


LINEAR = DrawingScale(root=1)
DEFAULT_SCALE = DrawingScale(root=3)
ADMISSIBLE_SCALES: Tuple[DrawingScale, ...] = tuple(DrawingScale(root=k) for k in (1, 2, 3, 4))


def check_distributive(
    scale: AxisMapping,
    spec: DistributionSpec,
    pairs: Iterable[Tuple[float, float]],
    rel_tol: float = 1e-12,
) -> bool:
    """
    Check g(F^-1(a)) / g(F^-1(b)) == g(rho(a, b)) for every probability pair.

    Accepts any object with ``apply`` so non-admissible mappings can be
    tested against the same rule.
    """
    for a, b in pairs:
        lhs = scale.apply(quantile(spec, a)) / scale.apply(quantile(spec, b))
        rhs = scale.apply(ratio_of_quantiles(spec, a, b))
        if not math.isclose(lhs, rhs, rel_tol=rel_tol, abs_tol=0.0):
            return False
    return True
