"""
Independent check of quantiles and angular limits.

The oracle inverts the CDF by brute-force bisection and shares nothing
with the main path except ``cdf``; agreement between the two is evidence
that the closed forms (and the gamma inversion) are right.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Iterable, List, Optional, Sequence

from pydantic import BaseModel

from ..charts.acl import DEFAULT_FALSE_ALARM, limit_angles
from ..charts.scales import ADMISSIBLE_SCALES, DrawingScale
from ..distributions import (
    ConvergenceError,
    DistributionFamily,
    DistributionSpec,
    cdf,
    check_probability,
    quantile,
)
from ..utils.logger import get_logger

# Doublings of the starting bracket, not a 2**10 multiple of it
MAX_DOUBLINGS = 1 << 10
MAX_BISECTIONS = 4000
MIN_TOLERANCE = 1e-12

GRID_SHAPES = (0.5, 1.0, 1.5, 2.0, 3.0, 5.0)
QUANTILE_TOLERANCE = 1e-8
ANGLE_TOLERANCE = 1e-8

logger = get_logger("acc.verification")


class VerificationRow(BaseModel):
    """One oracle comparison."""
    subject: str
    check: str
    expected: float
    observed: float
    deviation: float
    tolerance: float
    passed: bool


class VerificationReport(BaseModel):
    """Collected oracle comparisons."""
    rows: List[VerificationRow] = []

    @property
    def passed(self) -> bool:
        return all(row.passed for row in self.rows)

    @property
    def failures(self) -> List[VerificationRow]:
        return [row for row in self.rows if not row.passed]

    def extend(self, other: "VerificationReport") -> None:
        self.rows.extend(other.rows)


def _bracket_start(spec: DistributionSpec) -> float:
    if spec.family is DistributionFamily.LOGNORMAL:
        return math.exp(spec.scale)
    return spec.scale


def quantile_bisect(spec: DistributionSpec, p: float, tol: float = MIN_TOLERANCE) -> float:
    """
    Quantile by CDF bisection.

    The bracket starts at [0, alpha] and doubles until it straddles p.

    Args:
        spec: Distribution
        p: Probability, 0 < p < 1
        tol: Relative bracket width at which to stop (>= 1e-12)

    Returns:
        t with cdf(t) ~= p

    Raises:
        ConvergenceError: bracket could not be grown or bisection stalled
    """
    p = check_probability(p)
    tol = max(tol, MIN_TOLERANCE)

    lo, hi = 0.0, _bracket_start(spec)
    doublings = 0
    while cdf(spec, hi) < p:
        lo = hi
        hi *= 2.0
        doublings += 1
        if doublings > MAX_DOUBLINGS or math.isinf(hi):
            raise ConvergenceError(f"{spec.label}: no bracket for p={p} after {doublings} doublings")

    for _ in range(MAX_BISECTIONS):
        mid = 0.5 * (lo + hi)
        if cdf(spec, mid) < p:
            lo = mid
        else:
            hi = mid
        if hi - lo <= tol * hi:
            return 0.5 * (lo + hi)

    raise ConvergenceError(f"{spec.label}: bisection did not reach tol={tol} for p={p}")


def _row(subject: str, check: str, expected: float, observed: float, tolerance: float, relative: bool) -> VerificationRow:
    deviation = abs(observed - expected)
    if relative and expected != 0:
        deviation /= abs(expected)
    return VerificationRow(
        subject=subject,
        check=check,
        expected=expected,
        observed=observed,
        deviation=deviation,
        tolerance=tolerance,
        passed=deviation <= tolerance,
    )


def verify_angles(
    spec: DistributionSpec,
    c: float = DEFAULT_FALSE_ALARM,
    scale: Optional[DrawingScale] = None,
    tol: float = ANGLE_TOLERANCE,
) -> VerificationReport:
    """
    Recompute theta_L and theta_U from bisected quantiles and compare with
    ``limit_angles``.

    Returns:
        Report with one row per angle (deviation in degrees)
    """
    scale = scale or ADMISSIBLE_SCALES[0]
    subject = f"{spec.label} [{scale.name}]"
    limits = limit_angles(spec, c, scale)

    t_c = quantile_bisect(spec, 0.5)
    t_l = quantile_bisect(spec, c / 2.0)
    t_u = quantile_bisect(spec, 1.0 - c / 2.0)
    theta_l = math.degrees(math.atan(scale.apply(t_c / t_l)))
    theta_u = math.degrees(math.atan(scale.apply(t_c / t_u)))

    return VerificationReport(rows=[
        _row(subject, "theta_L", limits.theta_L, theta_l, tol, relative=False),
        _row(subject, "theta_U", limits.theta_U, theta_u, tol, relative=False),
    ])


def verify_quantiles(
    spec: DistributionSpec,
    probabilities: Iterable[float],
    tol: float = QUANTILE_TOLERANCE,
) -> VerificationReport:
    """Compare ``quantile`` against ``quantile_bisect`` (relative deviation)."""
    rows = []
    for p in probabilities:
        rows.append(_row(spec.label, f"quantile(p={p:g})", quantile_bisect(spec, p), quantile(spec, p), tol, relative=True))
    return VerificationReport(rows=rows)


def grid_specs(shapes: Sequence[float] = GRID_SHAPES) -> List[DistributionSpec]:
    """Every family over the shape grid (Rayleigh at 2, Erlang at integer shapes)."""
    specs = [DistributionSpec(family=DistributionFamily.EXPONENTIAL, scale=100.0),
             DistributionSpec(family=DistributionFamily.RAYLEIGH, scale=200.0)]
    for shape in shapes:
        specs.append(DistributionSpec(family=DistributionFamily.WEIBULL, scale=600.0, shape=shape))
        specs.append(DistributionSpec(family=DistributionFamily.LOGNORMAL, scale=1.0, shape=shape))
        specs.append(DistributionSpec(family=DistributionFamily.FRECHET, scale=100.0, shape=shape))
        specs.append(DistributionSpec(family=DistributionFamily.GAMMA, scale=100.0, shape=shape))
        if float(shape).is_integer():
            specs.append(DistributionSpec(family=DistributionFamily.ERLANG, scale=100.0, shape=shape))
    return specs


def verify_grid(
    c: float = DEFAULT_FALSE_ALARM,
    shapes: Sequence[float] = GRID_SHAPES,
    scales: Sequence[DrawingScale] = ADMISSIBLE_SCALES,
    workers: int = 1,
) -> VerificationReport:
    """
    Full sweep: quantiles at (c/2, 1/2, 1 - c/2) and angles at every scale,
    for every family and shape on the grid.
    """
    specs = grid_specs(shapes)

    def check(spec: DistributionSpec) -> VerificationReport:
        report = verify_quantiles(spec, (c / 2.0, 0.5, 1.0 - c / 2.0))
        for scale in scales:
            report.extend(verify_angles(spec, c, scale))
        return report

    report = VerificationReport()
    with ThreadPoolExecutor(max_workers=max(1, workers)) as pool:
        for partial in pool.map(check, specs):
            report.extend(partial)

    logger.info(
        f"Oracle sweep: {len(report.rows)} check(s) over {len(specs)} distribution(s), "
        f"{len(report.failures)} failure(s)"
    )
    return report
