"""Angular center line and angular control limits."""

import math
from typing import Iterable, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from ..distributions import DistributionError, DistributionFamily, DistributionSpec, quantile, ratio_of_quantiles
from ..errors import ACCError
from .scales import ADMISSIBLE_SCALES, LINEAR, DrawingScale

DEFAULT_FALSE_ALARM = 0.0027
CENTER_ANGLE = 45.0


class DegenerateLimitsError(ACCError):
    """Angular limits are not strictly ordered."""
    pass


def check_false_alarm(c: float) -> float:
    """Validate the false-alarm probability c (0 < c < 1)."""
    c = float(c)
    if not 0.0 < c < 1.0:
        raise DegenerateLimitsError(f"false-alarm probability must satisfy 0 < c < 1, got {c}")
    return c


class AngularLimits(BaseModel):
    """Angles in degrees (unrounded) of the AUCL, center line and ALCL."""
    model_config = ConfigDict(frozen=True)

    theta_U: float
    theta_C: float = CENTER_ANGLE
    theta_L: float

    def rounded(self, digits: int = 2) -> Tuple[float, float, float]:
        """(theta_U, theta_C, theta_L) rounded for tables."""
        return (round(self.theta_U, digits), round(self.theta_C, digits), round(self.theta_L, digits))


class LimitTimes(BaseModel):
    """Probability control limits of the t-chart for one state."""
    model_config = ConfigDict(frozen=True)

    lower: float
    center: float
    upper: float


class SweepRow(BaseModel):
    """One point of the angle-versus-shape relationship."""
    shape: float
    scale: str
    theta_U: float
    theta_L: float


def center_angle() -> float:
    """The center line: atan(rho(1/2, 1/2)) = atan(1) = 45 degrees, for any law and scale."""
    return CENTER_ANGLE


def _angle(scale: DrawingScale, ratio: float) -> float:
    return math.degrees(math.atan(scale.apply(ratio)))


def limit_angles(
    spec: DistributionSpec,
    c: float = DEFAULT_FALSE_ALARM,
    scale: DrawingScale = LINEAR,
) -> AngularLimits:
    """
    Angular control limits of one state transition.

    theta_L = atan(g(rho(1/2, c/2))), theta_U = atan(g(rho(1/2, 1 - c/2))).

    Args:
        spec: State transition distribution
        c: False-alarm probability
        scale: Drawing scale g

    Returns:
        AngularLimits in degrees

    Raises:
        DegenerateLimitsError: c invalid, quantile ratio out of float range,
            or angles not strictly ordered
    """
    c = check_false_alarm(c)
    try:
        theta_L = _angle(scale, ratio_of_quantiles(spec, 0.5, c / 2.0))
        theta_U = _angle(scale, ratio_of_quantiles(spec, 0.5, 1.0 - c / 2.0))
    except DistributionError as e:
        raise DegenerateLimitsError(f"{spec.label}: no usable limits for c={c} ({e})") from e

    if not 0.0 < theta_U < CENTER_ANGLE < theta_L < 90.0:
        raise DegenerateLimitsError(
            f"{spec.label}: limits not ordered for c={c} "
            f"(theta_U={theta_U:.6f}, theta_L={theta_L:.6f})"
        )
    return AngularLimits(theta_U=theta_U, theta_C=CENTER_ANGLE, theta_L=theta_L)


def limit_times(spec: DistributionSpec, c: float = DEFAULT_FALSE_ALARM) -> LimitTimes:
    """T_L, T_C, T_U: quantiles at c/2, 1/2 and 1 - c/2."""
    c = check_false_alarm(c)
    return LimitTimes(
        lower=quantile(spec, c / 2.0),
        center=quantile(spec, 0.5),
        upper=quantile(spec, 1.0 - c / 2.0),
    )


def family_constant_check(c: float = DEFAULT_FALSE_ALARM) -> Tuple[float, float]:
    """
    Shape-free Weibull constants (rhoL, rhoU).

    theta_L = atan(rhoL^(1/beta)), theta_U = atan(rhoU^(1/beta));
    513.096 and 0.10490 at c = 0.0027.
    """
    c = check_false_alarm(c)
    half = math.log(0.5)
    return half / math.log1p(-c / 2.0), half / math.log(c / 2.0)


def frechet_constants(c: float = DEFAULT_FALSE_ALARM) -> Tuple[float, float]:
    """Frechet analog of ``family_constant_check``: reciprocals of the Weibull pair (9.533, 1/513.096)."""
    rho_lower, rho_upper = family_constant_check(c)
    return 1.0 / rho_upper, 1.0 / rho_lower


def scale_table(c: float = DEFAULT_FALSE_ALARM) -> List[Tuple[str, AngularLimits]]:
    """Exponential limits at each admissible drawing scale."""
    spec = DistributionSpec(family=DistributionFamily.EXPONENTIAL, scale=1.0)
    return [(scale.name, limit_angles(spec, c, scale)) for scale in ADMISSIBLE_SCALES]


def shape_sweep(
    family: DistributionFamily,
    shapes: Iterable[float],
    c: float = DEFAULT_FALSE_ALARM,
    scales: Optional[Sequence[DrawingScale]] = None,
) -> List[SweepRow]:
    """
    Angular limits as a function of the shape parameter.

    The scale parameter is irrelevant to the angles, so a unit scale is used
    (zero for the lognormal location).
    """
    if family is DistributionFamily.EXPONENTIAL:
        raise DegenerateLimitsError("exponential has no shape parameter to sweep")
    scales = list(scales or ADMISSIBLE_SCALES)
    unit = 0.0 if family is DistributionFamily.LOGNORMAL else 1.0

    rows: List[SweepRow] = []
    for shape in shapes:
        spec = DistributionSpec(family=family, scale=unit, shape=shape)
        for scale in scales:
            limits = limit_angles(spec, c, scale)
            rows.append(SweepRow(
                shape=float(shape),
                scale=scale.name,
                theta_U=limits.theta_U,
                theta_L=limits.theta_L,
            ))
    return rows
