"""
Special functions used by the lifetime distributions.

The regularized lower incomplete gamma function follows the usual split:
power series below ``x < a + 1`` and a Lentz continued fraction for the
upper tail above it.
"""

import math
import sys

from .models import DistributionError
from ..errors import ACCError


class ConvergenceError(ACCError):
    """Iterative numeric method did not converge."""
    pass


GAMMA_ACCURACY = 1.0e-15
GAMMA_MAX_ITERATIONS = 2000
_TINY = sys.float_info.min / sys.float_info.epsilon


def regularized_lower_gamma(a: float, x: float) -> float:
    """
    P(a, x) = gamma(a, x) / Gamma(a).

    Args:
        a: Shape, a > 0
        x: Upper integration bound, x >= 0

    Returns:
        Value in [0, 1]
    """
    if not a > 0:
        raise DistributionError(f"incomplete gamma: a must be > 0, got {a}")
    if x <= 0.0:
        return 0.0
    if math.isinf(x):
        return 1.0

    if x < a + 1.0:
        return _lower_gamma_series(a, x)
    return 1.0 - _upper_gamma_continued_fraction(a, x)


def _iteration_cap(a: float) -> int:
    # Both expansions need on the order of sqrt(a) terms near x = a
    return GAMMA_MAX_ITERATIONS + int(20.0 * math.sqrt(a))


def _log_prefactor(a: float, x: float) -> float:
    return -x + a * math.log(x) - math.lgamma(a)


def _lower_gamma_series(a: float, x: float) -> float:
    ap = a
    term = 1.0 / a
    total = term
    for _ in range(_iteration_cap(a)):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * GAMMA_ACCURACY:
            return min(1.0, total * math.exp(_log_prefactor(a, x)))
    raise ConvergenceError(f"incomplete gamma series did not converge (a={a}, x={x})")


def _upper_gamma_continued_fraction(a: float, x: float) -> float:
    # Modified Lentz
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _iteration_cap(a) + 1):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < GAMMA_ACCURACY:
            return math.exp(_log_prefactor(a, x)) * h
    raise ConvergenceError(f"incomplete gamma continued fraction did not converge (a={a}, x={x})")


def standard_normal_cdf(x: float) -> float:
    """Phi(x) through the complementary error function (accurate in both tails)."""
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


# Rational approximation coefficients for the normal quantile
# (relative error ~1.2e-9 before refinement).
_A = (-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
      1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00)
_B = (-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
      6.680131188771972e+01, -1.328068155288572e+01)
_C = (-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
      -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00)
_D = (7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
      3.754408661907416e+00)
_P_LOW = 0.02425


def _rational_normal_quantile(p: float) -> float:
    if p < _P_LOW:
        q = math.sqrt(-2.0 * math.log(p))
        return ((((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]) /
                ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0))
    if p <= 1.0 - _P_LOW:
        q = p - 0.5
        r = q * q
        return ((((((_A[0] * r + _A[1]) * r + _A[2]) * r + _A[3]) * r + _A[4]) * r + _A[5]) * q /
                (((((_B[0] * r + _B[1]) * r + _B[2]) * r + _B[3]) * r + _B[4]) * r + 1.0))
    q = math.sqrt(-2.0 * math.log1p(-p))
    return -((((((_C[0] * q + _C[1]) * q + _C[2]) * q + _C[3]) * q + _C[4]) * q + _C[5]) /
             ((((_D[0] * q + _D[1]) * q + _D[2]) * q + _D[3]) * q + 1.0))


def inverse_standard_normal(p: float) -> float:
    """
    Standard normal quantile Phi^-1(p).

    Rational first guess, then one Newton step against ``standard_normal_cdf``.
    The upper half is mirrored onto the lower tail so the residual is never
    computed near 1.

    Args:
        p: Probability, 0 < p < 1

    Returns:
        z with Phi(z) = p (absolute error below 1e-10)

    Raises:
        DistributionError: p outside the open interval (0, 1)
    """
    if not 0.0 < p < 1.0:
        raise DistributionError(f"normal quantile needs 0 < p < 1, got {p}")
    if p == 0.5:
        return 0.0
    if p > 0.5:
        return -inverse_standard_normal(1.0 - p)

    x = _rational_normal_quantile(p)
    residual = standard_normal_cdf(x) - p
    density = math.exp(-0.5 * x * x) / math.sqrt(2.0 * math.pi)
    return x - residual / density
