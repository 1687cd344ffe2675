"""Tests for angular control limits."""

import math

import pytest
from scipy import stats

from src.charts import (
    ADMISSIBLE_SCALES,
    CENTER_ANGLE,
    DEFAULT_SCALE,
    LINEAR,
    DegenerateLimitsError,
    DrawingScale,
    center_angle,
    family_constant_check,
    frechet_constants,
    limit_angles,
    limit_times,
    scale_table,
    shape_sweep,
)
from src.distributions import DistributionFamily, DistributionSpec

C = 0.0027
SQRT = DrawingScale(root=2)

EXPONENTIAL_TABLE = {
    "linear": (89.89, 5.99),
    "sqrt": (87.47, 17.95),
    "cbrt": (82.88, 25.25),
    "qrt": (78.13, 29.64),
}


def spec(family, scale, shape=None):
    return DistributionSpec(family=family, scale=scale, shape=shape)


def test_center_angle_is_exactly_45():
    assert center_angle() == 45.0
    limits = limit_angles(spec("gamma", 100, 2.5), C, DEFAULT_SCALE)
    assert limits.theta_C == 45.0


@pytest.mark.parametrize("scale", ADMISSIBLE_SCALES, ids=lambda s: s.name)
def test_exponential_table(scale):
    limits = limit_angles(spec("exponential", 100), C, scale)
    theta_L, theta_U = EXPONENTIAL_TABLE[scale.name]
    assert limits.theta_L == pytest.approx(theta_L, abs=0.01)
    assert limits.theta_U == pytest.approx(theta_U, abs=0.01)


def test_scale_table_matches_limit_angles():
    table = scale_table(C)
    assert [name for name, _ in table] == list(EXPONENTIAL_TABLE)
    for name, limits in table:
        assert limits.rounded() == (EXPONENTIAL_TABLE[name][1], 45.0, EXPONENTIAL_TABLE[name][0])


def test_weibull_constants():
    rho_lower, rho_upper = family_constant_check(C)
    assert rho_lower == pytest.approx(513.096, abs=5e-4)
    assert round(rho_upper, 3) == 0.105


def test_frechet_constants():
    rho_lower, rho_upper = frechet_constants(C)
    assert round(rho_lower, 3) == 9.533
    assert rho_upper == pytest.approx(1 / 513.096, rel=1e-6)


@pytest.mark.parametrize("shape", [0.5, 1.5, 3.0])
def test_weibull_summary_formula(shape):
    rho_lower, rho_upper = family_constant_check(C)
    limits = limit_angles(spec("weibull", 600, shape), C, LINEAR)
    assert limits.theta_L == pytest.approx(math.degrees(math.atan(rho_lower ** (1 / shape))), abs=1e-12)
    assert limits.theta_U == pytest.approx(math.degrees(math.atan(rho_upper ** (1 / shape))), abs=1e-12)


def test_rayleigh_row_equals_square_root_exponential():
    limits = limit_angles(spec("rayleigh", 200), C, LINEAR)
    assert limits.theta_L == pytest.approx(87.47, abs=0.01)
    assert limits.theta_U == pytest.approx(17.95, abs=0.01)


def test_frechet_unit_shape():
    limits = limit_angles(spec("frechet", 100, 1.0), C, LINEAR)
    assert limits.theta_L == pytest.approx(84.01, abs=0.01)
    assert limits.theta_U == pytest.approx(0.1117, abs=1e-4)


@pytest.mark.parametrize("beta", [0.5, 1.0, 2.0])
def test_lognormal_angles(beta):
    limits = limit_angles(spec("lognormal", 4.0, beta), C, LINEAR)
    z = stats.norm.ppf(C / 2)
    assert limits.theta_L == pytest.approx(math.degrees(math.atan(math.exp(-beta * z))), abs=1e-9)
    assert limits.theta_U == pytest.approx(math.degrees(math.atan(math.exp(beta * z))), abs=1e-9)
    # Phi^-1(0.00135) is -3 to four decimals
    assert limits.theta_L == pytest.approx(math.degrees(math.atan(math.exp(3 * beta))), abs=1e-3)


@pytest.mark.parametrize("family,shape", [
    ("exponential", None), ("weibull", 1.5), ("lognormal", 0.8), ("frechet", 2.0), ("gamma", 3.0),
])
def test_angles_do_not_depend_on_scale_parameter(family, shape):
    small = limit_angles(spec(family, 1.0, shape), C, DEFAULT_SCALE)
    large = limit_angles(spec(family, 5000.0, shape), C, DEFAULT_SCALE)
    assert small.theta_L == pytest.approx(large.theta_L, abs=1e-10)
    assert small.theta_U == pytest.approx(large.theta_U, abs=1e-10)


@pytest.mark.parametrize("scale", ADMISSIBLE_SCALES, ids=lambda s: s.name)
def test_limits_strictly_ordered(scale):
    for dist in (spec("weibull", 1, 5.0), spec("gamma", 1, 0.5), spec("lognormal", 0, 3.0)):
        limits = limit_angles(dist, C, scale)
        assert 0 < limits.theta_U < CENTER_ANGLE < limits.theta_L < 90


def test_half_false_alarm_places_limits_at_quartiles():
    limits = limit_angles(spec("exponential", 1), 0.5, LINEAR)
    assert limits.theta_L == pytest.approx(math.degrees(math.atan(math.log(0.5) / math.log(0.75))))
    assert limits.theta_U == pytest.approx(math.degrees(math.atan(0.5)))


@pytest.mark.parametrize("c", [0.0, 1.0, -0.01, 1.2])
def test_false_alarm_outside_open_interval(c):
    with pytest.raises(DegenerateLimitsError):
        limit_angles(spec("exponential", 100), c)


def test_limit_times_exponential():
    times = limit_times(spec("exponential", 100), C)
    assert times.lower == pytest.approx(0.13509, abs=1e-5)
    assert times.center == pytest.approx(69.3147, abs=1e-4)
    assert times.upper == pytest.approx(660.77, abs=1e-2)


def test_limit_times_exponential_states():
    assert limit_times(spec("exponential", 400), C).upper == pytest.approx(2643.06, abs=0.01)
    assert limit_times(spec("exponential", 800), C).lower == pytest.approx(1.0807, abs=1e-4)


def test_shape_sweep_rows():
    rows = shape_sweep(DistributionFamily.WEIBULL, [1.0, 2.0], C)
    assert len(rows) == 8
    first = rows[0]
    assert (first.shape, first.scale) == (1.0, "linear")
    assert first.theta_L == pytest.approx(89.89, abs=0.01)


def test_shape_sweep_narrows_with_shape():
    rows = shape_sweep(DistributionFamily.WEIBULL, [0.5, 1.0, 2.0, 4.0], C, [LINEAR])
    lowers = [row.theta_L for row in rows]
    uppers = [row.theta_U for row in rows]
    assert lowers == sorted(lowers, reverse=True)
    assert uppers == sorted(uppers)


def test_shape_sweep_lognormal_uses_zero_location():
    rows = shape_sweep(DistributionFamily.LOGNORMAL, [1.0], C, [SQRT])
    assert rows[0].theta_U < 45 < rows[0].theta_L


def test_shape_sweep_rejects_exponential():
    with pytest.raises(DegenerateLimitsError):
        shape_sweep(DistributionFamily.EXPONENTIAL, [1.0])


@pytest.mark.parametrize("scale", ADMISSIBLE_SCALES, ids=lambda s: s.name)
@pytest.mark.parametrize("shape", [0.5, 1.0, 2.0, 4.5])
def test_frechet_mirrors_weibull(scale, shape):
    # 1/X of a Weibull is Frechet: each limit is the other's complement to 90
    frechet = limit_angles(spec("frechet", 10, shape), C, scale)
    weibull = limit_angles(spec("weibull", 10, shape), C, scale)
    assert abs(frechet.theta_L + weibull.theta_U - 90.0) <= 1e-9
    assert abs(frechet.theta_U + weibull.theta_L - 90.0) <= 1e-9


@pytest.mark.parametrize("scale", ADMISSIBLE_SCALES, ids=lambda s: s.name)
@pytest.mark.parametrize("family", ["weibull", "gamma", "erlang"])
def test_unit_shape_reproduces_exponential(scale, family):
    expected = limit_angles(spec("exponential", 100), C, scale)
    got = limit_angles(spec(family, 100, 1.0), C, scale)
    assert got.theta_L == pytest.approx(expected.theta_L, abs=1e-8)
    assert got.theta_U == pytest.approx(expected.theta_U, abs=1e-8)


@pytest.mark.parametrize("dist", [spec("weibull", 1, 0.005), spec("lognormal", 0.0, 300.0)])
def test_limits_beyond_float_range_are_degenerate(dist):
    with pytest.raises(DegenerateLimitsError, match="no usable limits"):
        limit_angles(dist, C, DEFAULT_SCALE)


def test_gamma_limits_for_large_shape():
    shape = 1.0e5
    limits = limit_angles(spec("gamma", 1, shape), C, LINEAR)
    median = stats.gamma.ppf(0.5, shape)
    assert limits.theta_L == pytest.approx(math.degrees(math.atan(median / stats.gamma.ppf(C / 2, shape))), abs=1e-6)
    assert limits.theta_U == pytest.approx(math.degrees(math.atan(median / stats.gamma.ppf(1 - C / 2, shape))), abs=1e-6)
