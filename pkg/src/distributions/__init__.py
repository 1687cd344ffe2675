"""Lifetime distributions of state transitions."""

from .models import DistributionError, DistributionFamily, DistributionSpec
from .special import ConvergenceError, inverse_standard_normal, regularized_lower_gamma
from .functions import cdf, check_probability, quantile, ratio_of_quantiles, sample

__all__ = [
    'DistributionError',
    'DistributionFamily',
    'DistributionSpec',
    'ConvergenceError',
    'inverse_standard_normal',
    'regularized_lower_gamma',
    'cdf',
    'check_probability',
    'quantile',
    'ratio_of_quantiles',
    'sample',
]
