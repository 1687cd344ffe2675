"""Angular control charts: scales, limits, chart construction."""

from .scales import (
    ADMISSIBLE_SCALES,
    DEFAULT_SCALE,
    LINEAR,
    DrawingScale,
    ScaleError,
    check_distributive,
)
from .acl import (
    CENTER_ANGLE,
    DEFAULT_FALSE_ALARM,
    AngularLimits,
    DegenerateLimitsError,
    LimitTimes,
    center_angle,
    family_constant_check,
    frechet_constants,
    limit_angles,
    limit_times,
    scale_table,
    shape_sweep,
)
from .models import (
    CenterSide,
    Chart,
    ChartDesign,
    ClassifiedPoint,
    MedianSplit,
    Observation,
    StateLimits,
    StateSummary,
    StateTransition,
    Status,
    SystemModel,
)
from .chart import (
    ChartValidationError,
    MixedFamilyError,
    MixedShapeError,
    UnknownStateError,
    build_chart,
    classify,
    median_split,
    point_angle,
    resolve_design,
    state_summary,
    validate_standard,
)

__all__ = [
    'ADMISSIBLE_SCALES', 'DEFAULT_SCALE', 'LINEAR', 'DrawingScale', 'ScaleError', 'check_distributive',
    'CENTER_ANGLE', 'DEFAULT_FALSE_ALARM', 'AngularLimits', 'DegenerateLimitsError', 'LimitTimes',
    'center_angle', 'family_constant_check', 'frechet_constants', 'limit_angles', 'limit_times',
    'scale_table', 'shape_sweep',
    'CenterSide', 'Chart', 'ChartDesign', 'ClassifiedPoint', 'MedianSplit', 'Observation',
    'StateLimits', 'StateSummary', 'StateTransition', 'Status', 'SystemModel',
    'ChartValidationError', 'MixedFamilyError', 'MixedShapeError', 'UnknownStateError',
    'build_chart', 'classify', 'median_split', 'point_angle', 'resolve_design',
    'state_summary', 'validate_standard',
]
