"""Tests for SVG rendering."""

import math
import re
from concurrent.futures import ThreadPoolExecutor

import pytest

from src.charts import Observation, build_chart
from src.rendering import RenderError, RenderOptions, limit_polyline, point_coordinates, render_svg


def polyline_points(svg: str, css: str):
    match = re.search(rf'<polyline class="{css}" points="([^"]+)"', svg)
    assert match, css
    return [tuple(float(v) for v in pair.split(",")) for pair in match.group(1).split()]


@pytest.fixture
def example1_chart(example1_system, example1_observations):
    return build_chart(example1_system, "auto", example1_observations)


@pytest.fixture
def example3_chart(example3_system, example3_observations):
    return build_chart(example3_system, "auto", example3_observations)


def test_svg_document_structure(example1_chart):
    svg = render_svg(example1_chart)
    assert svg.startswith('<?xml version="1.0"')
    assert 'version="1.1"' in svg
    assert 'width="900" height="600"' in svg
    assert svg.rstrip().endswith("</svg>")


def test_one_marker_per_point(example1_chart):
    svg = render_svg(example1_chart)
    assert svg.count('<circle class="point ') == 50
    assert svg.count('class="point improvement"') == 2
    assert svg.count('class="point degradation"') == 1
    assert 'data-seq="42"' in svg


def test_standard_limits_are_straight_rays(example1_chart):
    svg = render_svg(example1_chart)
    for css in ("acl-lower", "acl-center", "acl-upper"):
        assert len(polyline_points(svg, css)) == 2


def test_generalized_limits_cross_each_state_line(example3_chart):
    svg = render_svg(example3_chart)
    for css in ("acl-lower", "acl-center", "acl-upper"):
        # origin, four crossings, extension to the border
        assert len(polyline_points(svg, css)) == 6


def test_limit_polyline_runs_bottom_to_top(example3_chart):
    path = limit_polyline(example3_chart, "upper")
    assert path[0] == (0.0, 0.0)
    ys = [y for _, y in path]
    assert ys == sorted(ys)
    scale = example3_chart.system.scale
    s1 = example3_chart.state_lines[0]
    assert path[1] == pytest.approx((scale.apply(s1.times.upper), scale.apply(s1.times.center)))


def test_point_coordinates_use_drawing_scale(example1_chart):
    x, y = point_coordinates(example1_chart)[0]
    assert x == pytest.approx(288.50 ** (1 / 3))
    assert y == pytest.approx((100 * 0.6931471805599453) ** (1 / 3))


@pytest.mark.parametrize("example", ["example1", "example3"])
def test_point_coordinates_match_angles(request, example):
    chart = request.getfixturevalue(f"{example}_chart")
    for (x, y), point in zip(point_coordinates(chart), chart.points):
        if x > 0:
            assert y / x == pytest.approx(math.tan(math.radians(point.theta)), rel=1e-9)


def test_generalized_center_line_is_diagonal(example3_chart):
    path = limit_polyline(example3_chart, "center")
    assert len(path) == 5
    assert all(x == y for x, y in path)


def test_canvas_size_options(example1_chart):
    svg = render_svg(example1_chart, RenderOptions(width=400, height=300, margin=20))
    assert 'viewBox="0 0 400 300"' in svg


def test_no_drawable_area(example1_chart):
    with pytest.raises(RenderError):
        render_svg(example1_chart, RenderOptions(width=100, height=600, margin=60))


def test_title_is_escaped(example1_chart):
    svg = render_svg(example1_chart, RenderOptions(title="S1 < S2 & S3"))
    assert "S1 &lt; S2 &amp; S3" in svg


def test_coincident_points_are_stacked(example1_system):
    observations = [
        Observation(seq=1, state_index=1, ttf=50.0),
        Observation(seq=2, state_index=1, ttf=50.0),
        Observation(seq=3, state_index=1, ttf=50.0),
    ]
    svg = render_svg(build_chart(example1_system, "auto", observations))
    assert 'class="multiplicity"' in svg
    assert ">x3</text>" in svg
    cys = re.findall(r'<circle class="point [a-z_]+" data-seq="\d+" cx="[\d.]+" cy="([\d.]+)"', svg)
    assert len(set(cys)) == 3


def test_rendering_is_deterministic(example3_chart):
    assert render_svg(example3_chart) == render_svg(example3_chart)


def test_rendering_does_not_depend_on_threads(example1_chart, example3_chart):
    charts = [example1_chart, example3_chart] * 4
    serial = [render_svg(chart) for chart in charts]
    with ThreadPoolExecutor(max_workers=4) as pool:
        parallel = list(pool.map(render_svg, charts))
    assert serial == parallel


@pytest.mark.parametrize("example", ["example1", "example3"])
def test_golden_svg(request, golden, example):
    system = request.getfixturevalue(f"{example}_system")
    observations = request.getfixturevalue(f"{example}_observations")
    golden(f"{example}.svg", render_svg(build_chart(system, "auto", observations)))
