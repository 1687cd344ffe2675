"""Oracle checks for quantiles and angular limits."""

from .oracle import (
    GRID_SHAPES,
    VerificationReport,
    VerificationRow,
    grid_specs,
    quantile_bisect,
    verify_angles,
    verify_grid,
    verify_quantiles,
)

__all__ = [
    'GRID_SHAPES',
    'VerificationReport', 'VerificationRow', 'grid_specs', 'quantile_bisect',
    'verify_angles', 'verify_grid', 'verify_quantiles',
]
