"""Build standard and generalized angular control charts and classify observations."""

import math
from typing import Dict, Iterable, List, Optional, Union

from ..errors import ACCError
from ..utils.logger import get_logger
from .acl import CENTER_ANGLE, AngularLimits, limit_angles, limit_times
from .models import (
    CenterSide,
    Chart,
    ChartDesign,
    ClassifiedPoint,
    MedianSplit,
    OVERALL_LABEL,
    Observation,
    StateLimits,
    StateSummary,
    Status,
    SystemModel,
)
from .scales import DrawingScale, ScaleError

CENTER_TOLERANCE = 1e-12

logger = get_logger("acc.charts")


class ChartValidationError(ACCError):
    """System definition cannot be drawn with the requested design."""
    pass


class MixedFamilyError(ChartValidationError):
    """Standard design with states from different distribution families."""
    pass


class MixedShapeError(ChartValidationError):
    """Standard design with states of different shape parameters."""
    pass


class UnknownStateError(ACCError):
    """Observation references a state the system does not define."""
    pass


def validate_standard(system: SystemModel) -> None:
    """
    Check that one set of straight ACLs serves every state.

    All states must share the distribution family and shape; scale
    parameters may differ.

    Raises:
        MixedFamilyError: families differ (offending states named)
        MixedShapeError: shapes differ (offending states named)
    """
    reference = system.states[0]
    family = reference.spec.family.base
    shape = reference.spec.shape_or_one

    mixed_family = [s.label for s in system.states if s.spec.family.base is not family]
    if mixed_family:
        raise MixedFamilyError(
            f"standard design needs one distribution family: {reference.label} is "
            f"{reference.spec.family.value}, but {', '.join(mixed_family)} differ"
        )

    mixed_shape = [s.label for s in system.states if s.spec.shape_or_one != shape]
    if mixed_shape:
        raise MixedShapeError(
            f"standard design needs one shape parameter: {reference.label} has "
            f"beta={shape:g}, but {', '.join(mixed_shape)} differ"
        )


def resolve_design(system: SystemModel, design: Union[str, ChartDesign]) -> ChartDesign:
    """Resolve 'auto' to standard when ``validate_standard`` passes, else generalized."""
    if isinstance(design, ChartDesign):
        return design
    if design == "auto":
        try:
            validate_standard(system)
            return ChartDesign.STANDARD
        except ChartValidationError as e:
            logger.debug(f"auto design falls back to generalized: {e}")
            return ChartDesign.GENERALIZED
    try:
        return ChartDesign(design)
    except ValueError:
        raise ChartValidationError(
            f"Unknown chart design '{design}' (expected standard, generalized or auto)"
        ) from None


def point_angle(t_c: float, t: float, scale: DrawingScale) -> float:
    """
    Angle (degrees) of the ray from the origin to an observation point.

    theta = atan(g(t_c) / g(t)); t = 0 gives 90.

    Raises:
        ScaleError: t < 0 or t_c <= 0
    """
    if t < 0:
        raise ScaleError(f"time-to-failure must be >= 0, got {t}")
    if not t_c > 0:
        raise ScaleError(f"state median must be > 0, got {t_c}")
    return math.degrees(math.atan2(scale.apply(t_c), scale.apply(t)))


def classify(theta: float, limits: AngularLimits) -> Status:
    """Single-point rule; theta equal to a limit is in control."""
    if theta < limits.theta_U:
        return Status.IMPROVEMENT
    if theta > limits.theta_L:
        return Status.DEGRADATION
    return Status.IN_CONTROL


def center_side(theta: float) -> CenterSide:
    if abs(theta - CENTER_ANGLE) <= CENTER_TOLERANCE:
        return CenterSide.ON
    return CenterSide.ABOVE if theta > CENTER_ANGLE else CenterSide.BELOW


def build_chart(
    system: SystemModel,
    design: Union[str, ChartDesign],
    observations: Iterable[Observation] = (),
) -> Chart:
    """
    Compute state lines, limits and classify every observation.

    Args:
        system: State transitions, c and drawing scale
        design: standard, generalized or auto
        observations: Points in event order (order is preserved)

    Returns:
        Immutable Chart

    Raises:
        ChartValidationError: standard design requested for a mixed system
        UnknownStateError: observation with an out-of-range state index
    """
    design = resolve_design(system, design)
    if design is ChartDesign.STANDARD:
        validate_standard(system)

    shared: Optional[AngularLimits] = None
    if design is ChartDesign.STANDARD:
        shared = limit_angles(system.states[0].spec, system.c, system.scale)

    states: List[StateLimits] = []
    for index, state in enumerate(system.states, start=1):
        limits = shared or limit_angles(state.spec, system.c, system.scale)
        states.append(StateLimits(
            index=index,
            label=state.label,
            spec=state.spec,
            times=limit_times(state.spec, system.c),
            limits=limits,
        ))

    points: List[ClassifiedPoint] = []
    for observation in observations:
        if observation.state_index > len(states):
            raise UnknownStateError(
                f"observation seq={observation.seq} references state {observation.state_index}, "
                f"system has {len(states)} state(s)"
            )
        state = states[observation.state_index - 1]
        theta = point_angle(state.times.center, observation.ttf, system.scale)
        points.append(ClassifiedPoint(
            observation=observation,
            state_label=state.label,
            t_c=state.times.center,
            theta=theta,
            status=classify(theta, state.limits),
            above_center=center_side(theta),
        ))

    chart = Chart(system=system, design=design, states=states, points=points)
    logger.debug(
        f"Built {design.value} chart: {len(states)} state(s), {len(points)} point(s), "
        f"{len(chart.out_of_control)} out of control"
    )
    return chart


def _split(points: Iterable[ClassifiedPoint]) -> MedianSplit:
    split = MedianSplit()
    for point in points:
        if point.above_center is CenterSide.ABOVE:
            split.above += 1
        elif point.above_center is CenterSide.BELOW:
            split.below += 1
        else:
            split.on += 1
    return split


def median_split(chart: Chart) -> Dict[str, MedianSplit]:
    """
    Above/below/on counts per state label plus the whole system under 'overall'.

    Roughly half of in-control points should lie above the center line.
    """
    result = {state.label: _split(p for p in chart.points if p.state_label == state.label)
              for state in chart.states}
    result[OVERALL_LABEL] = _split(chart.points)
    return result


def state_summary(chart: Chart) -> List[StateSummary]:
    """Per-state limits and counts in system order."""
    splits = median_split(chart)
    summaries = []
    for state in chart.states:
        own = [p for p in chart.points if p.state_label == state.label]
        summaries.append(StateSummary(
            index=state.index,
            label=state.label,
            distribution=state.spec.label,
            T_L=state.times.lower,
            T_C=state.times.center,
            T_U=state.times.upper,
            theta_U=state.limits.theta_U,
            theta_C=state.limits.theta_C,
            theta_L=state.limits.theta_L,
            points=len(own),
            improvement=sum(p.status is Status.IMPROVEMENT for p in own),
            degradation=sum(p.status is Status.DEGRADATION for p in own),
            split=splits[state.label],
        ))
    return summaries
