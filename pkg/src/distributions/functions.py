"""Quantile, CDF, ratio-of-quantiles and sampling for lifetime distributions."""

import math

from .models import DistributionError, DistributionFamily, DistributionSpec
from .special import (
    ConvergenceError,
    inverse_standard_normal,
    regularized_lower_gamma,
    standard_normal_cdf,
)
from ..utils.logger import get_logger

GAMMA_QUANTILE_TOLERANCE = 1.0e-10
GAMMA_BISECTION_MAX_STEPS = 400

logger = get_logger("acc.distributions")


def _finite(value: float, spec: DistributionSpec, what: str) -> float:
    if math.isinf(value):
        raise DistributionError(f"{spec.label}: {what} overflows to infinity")
    return value


def check_probability(p: float, name: str = "p") -> float:
    """Reject probabilities outside the open interval (0, 1)."""
    p = float(p)
    if not 0.0 < p < 1.0:
        raise DistributionError(f"{name} must satisfy 0 < {name} < 1, got {p}")
    return p


def cdf(spec: DistributionSpec, t: float) -> float:
    """
    Cumulative probability F(t) of a state transition's TTF.

    Args:
        spec: Distribution parameters
        t: Time; values at or below zero return 0

    Returns:
        F(t) in [0, 1]
    """
    if t <= 0.0:
        return 0.0
    if math.isinf(t):
        return 1.0

    family = spec.family.base
    alpha = spec.scale

    if family is DistributionFamily.EXPONENTIAL:
        return -math.expm1(-t / alpha)
    if family is DistributionFamily.WEIBULL:
        return -math.expm1(-((t / alpha) ** spec.shape))
    if family is DistributionFamily.LOGNORMAL:
        return standard_normal_cdf((math.log(t) - alpha) / spec.shape)
    if family is DistributionFamily.FRECHET:
        return math.exp(-((t / alpha) ** -spec.shape))
    if family is DistributionFamily.GAMMA:
        return regularized_lower_gamma(spec.shape, t / alpha)

    raise DistributionError(f"Unsupported family: {spec.family}")


def standard_gamma_quantile(shape: float, p: float) -> float:
    """
    Quantile of Gamma(shape, scale=1) by bracketed bisection on the CDF.

    Bracket is [0, shape + 40*sqrt(shape) + 40]; stops when the bracket is
    narrower than ``GAMMA_QUANTILE_TOLERANCE`` relative to its upper end.
    """
    p = check_probability(p)
    lo = 0.0
    hi = shape + 40.0 * math.sqrt(shape) + 40.0
    if regularized_lower_gamma(shape, hi) < p:
        raise ConvergenceError(f"gamma quantile bracket too small (shape={shape}, p={p})")

    for step in range(GAMMA_BISECTION_MAX_STEPS):
        mid = 0.5 * (lo + hi)
        if regularized_lower_gamma(shape, mid) < p:
            lo = mid
        else:
            hi = mid
        if hi - lo <= GAMMA_QUANTILE_TOLERANCE * hi:
            logger.debug("gamma quantile shape=%g p=%g: %.12g after %d bisection steps", shape, p, 0.5 * (lo + hi), step + 1)
            return 0.5 * (lo + hi)

    raise ConvergenceError(f"gamma quantile bisection did not converge (shape={shape}, p={p})")


def quantile(spec: DistributionSpec, p: float) -> float:
    """
    Inverse CDF F^-1(p).

    Closed forms for exponential, Weibull/Rayleigh, lognormal and Frechet;
    gamma/Erlang are inverted numerically.

    Args:
        spec: Distribution parameters
        p: Probability, 0 < p < 1

    Returns:
        Time t with F(t) = p

    Raises:
        DistributionError: p outside (0, 1), or F^-1(p) not representable as a float
    """
    p = check_probability(p)
    try:
        return _finite(_quantile(spec, p), spec, f"quantile at p={p:g}")
    except (OverflowError, ZeroDivisionError) as e:
        raise DistributionError(f"{spec.label}: quantile at p={p:g} is out of float range") from e


def _quantile(spec: DistributionSpec, p: float) -> float:
    family = spec.family.base
    alpha = spec.scale

    if family is DistributionFamily.EXPONENTIAL:
        return -alpha * math.log1p(-p)
    if family is DistributionFamily.WEIBULL:
        return alpha * (-math.log1p(-p)) ** (1.0 / spec.shape)
    if family is DistributionFamily.LOGNORMAL:
        return math.exp(alpha + spec.shape * inverse_standard_normal(p))
    if family is DistributionFamily.FRECHET:
        return alpha * (-math.log(p)) ** (-1.0 / spec.shape)
    if family is DistributionFamily.GAMMA:
        return alpha * standard_gamma_quantile(spec.shape, p)

    raise DistributionError(f"Unsupported family: {spec.family}")


def ratio_of_quantiles(spec: DistributionSpec, a: float, b: float) -> float:
    """
    rho(a, b) = F^-1(a) / F^-1(b).

    The scale parameter cancels in every family, so closed forms never
    touch it and the gamma path inverts the unit-scale law.
    """
    a = check_probability(a, "a")
    b = check_probability(b, "b")
    try:
        return _finite(_ratio_of_quantiles(spec, a, b), spec, f"rho({a:g}, {b:g})")
    except (OverflowError, ZeroDivisionError) as e:
        raise DistributionError(f"{spec.label}: rho({a:g}, {b:g}) is out of float range") from e


def _ratio_of_quantiles(spec: DistributionSpec, a: float, b: float) -> float:
    family = spec.family.base

    if family is DistributionFamily.EXPONENTIAL:
        return math.log1p(-a) / math.log1p(-b)
    if family is DistributionFamily.WEIBULL:
        return (math.log1p(-a) / math.log1p(-b)) ** (1.0 / spec.shape)
    if family is DistributionFamily.LOGNORMAL:
        return math.exp(spec.shape * (inverse_standard_normal(a) - inverse_standard_normal(b)))
    if family is DistributionFamily.FRECHET:
        return (math.log(b) / math.log(a)) ** (1.0 / spec.shape)
    if family is DistributionFamily.GAMMA:
        if a == b:
            return 1.0
        return standard_gamma_quantile(spec.shape, a) / standard_gamma_quantile(spec.shape, b)

    raise DistributionError(f"Unsupported family: {spec.family}")


def sample(spec: DistributionSpec, u: float) -> float:
    """Inverse-transform variate for a uniform draw ``u`` supplied by the caller."""
    return quantile(spec, u)
