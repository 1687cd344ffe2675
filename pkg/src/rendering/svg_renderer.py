"""Deterministic SVG rendering of angular control charts."""

import math
from typing import Dict, List, Optional, Sequence, Tuple
from xml.sax.saxutils import escape

from pydantic import BaseModel, Field

from ..charts.models import Chart, ChartDesign, ClassifiedPoint, Status
from ..errors import ACCError
from ..utils.logger import get_logger

logger = get_logger("acc.rendering")

Point = Tuple[float, float]


class RenderError(ACCError):
    """Chart cannot be drawn with the given options."""
    pass


DEFAULT_COLORS: Dict[str, str] = {
    Status.IN_CONTROL.value: "#1f77b4",
    Status.IMPROVEMENT.value: "#2ca02c",
    Status.DEGRADATION.value: "#d62728",
}

LIMIT_STYLES = {
    'lower': ("#d62728", "6,4"),
    'center': ("#555555", ""),
    'upper': ("#2ca02c", "6,4"),
}


class RenderOptions(BaseModel):
    """Canvas and marker settings."""
    width: int = Field(default=900, gt=0)
    height: int = Field(default=600, gt=0)
    margin: int = Field(default=60, ge=0)
    marker_radius: float = Field(default=4.0, gt=0)
    coincidence_offset: float = Field(default=6.0, gt=0)
    colors: Dict[str, str] = Field(default_factory=lambda: dict(DEFAULT_COLORS))
    title: Optional[str] = None


def point_coordinates(chart: Chart) -> List[Point]:
    """Chart-space (g(ttf), g(T_C)) of every point, before pixel mapping."""
    scale = chart.system.scale
    return [(scale.apply(p.observation.ttf), scale.apply(p.t_c)) for p in chart.points]


def limit_polyline(chart: Chart, which: str) -> List[Point]:
    """
    Chart-space crossing points of one ACL with the state lines.

    Ordered bottom to top; ``which`` is lower, center or upper. The origin
    is prepended, the extension past the top line is added by the renderer.
    """
    scale = chart.system.scale
    points: List[Point] = [(0.0, 0.0)]
    for state in chart.state_lines:
        t = getattr(state.times, which)
        points.append((scale.apply(t), scale.apply(state.times.center)))
    return points


class _Canvas:
    """Maps chart space onto the drawable pixel area."""

    def __init__(self, options: RenderOptions, x_max: float, y_max: float):
        self.options = options
        self.plot_w = options.width - 2 * options.margin
        self.plot_h = options.height - 2 * options.margin
        if self.plot_w <= 0 or self.plot_h <= 0:
            raise RenderError(
                f"no drawable area: {options.width}x{options.height} canvas with margin {options.margin}"
            )
        self.x_max = x_max
        self.y_max = y_max

    def px(self, x: float, y: float) -> Point:
        m = self.options.margin
        return (
            m + x / self.x_max * self.plot_w,
            self.options.height - m - y / self.y_max * self.plot_h,
        )

    def clip_ray(self, x: float, y: float) -> Point:
        """Extend the ray from the origin through (x, y) to the plot border."""
        if x <= 0:
            return 0.0, self.y_max
        slope = y / x
        end_x = min(self.x_max, self.y_max / slope) if slope > 0 else self.x_max
        return end_x, end_x * slope


def _fmt(value: float) -> str:
    text = f"{value:.2f}"
    return "0.00" if text == "-0.00" else text


def _polyline(points: Sequence[Point], stroke: str, dash: str, width: float = 1.5, css: str = "") -> str:
    coords = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in points)
    dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
    class_attr = f' class="{css}"' if css else ""
    return (f'<polyline{class_attr} points="{coords}" fill="none" stroke="{stroke}" '
            f'stroke-width="{width}"{dash_attr}/>')


def _extent(chart: Chart) -> Tuple[float, float]:
    scale = chart.system.scale
    xs = [scale.apply(s.times.upper) for s in chart.states]
    xs += [x for x, _ in point_coordinates(chart)]
    ys = [scale.apply(s.times.center) for s in chart.states]
    return max(xs) * 1.05, max(ys) * 1.15


def _coincidence_groups(points: List[Tuple[ClassifiedPoint, Point]], radius: float) -> List[List[Tuple[ClassifiedPoint, Point]]]:
    """Group markers of one state line whose centres are closer than one radius."""
    ordered = sorted(points, key=lambda item: (item[1][0], item[0].observation.seq))
    groups: List[List[Tuple[ClassifiedPoint, Point]]] = []
    for item in ordered:
        if groups and item[1][0] - groups[-1][0][1][0] <= radius:
            groups[-1].append(item)
        else:
            groups.append([item])
    return groups


def render_svg(chart: Chart, options: Optional[RenderOptions] = None) -> str:
    """
    Render a chart as an SVG 1.1 document.

    Both axes use the chart's drawing scale. Standard charts get straight
    ACLs from the origin; generalized charts get polylines through each
    state line's g(T_L), g(T_C), g(T_U), extended to the origin and past
    the top state line. Output depends only on the inputs.

    Args:
        chart: Built chart
        options: Canvas settings (defaults when None)

    Returns:
        SVG document text

    Raises:
        RenderError: canvas has no drawable area
    """
    options = options or RenderOptions()
    x_max, y_max = _extent(chart)
    canvas = _Canvas(options, x_max, y_max)
    scale = chart.system.scale
    m = options.margin

    lines: List[str] = [
        '<?xml version="1.0" encoding="UTF-8" standalone="no"?>',
        (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{options.width}" '
         f'height="{options.height}" viewBox="0 0 {options.width} {options.height}">'),
        f'<rect x="0" y="0" width="{options.width}" height="{options.height}" fill="#ffffff"/>',
    ]

    title = options.title or f"Angular control chart ({chart.design.value}, {scale.name} scale)"
    lines.append(f'<text x="{_fmt(options.width / 2)}" y="{_fmt(m / 2)}" text-anchor="middle" '
                 f'font-family="sans-serif" font-size="14">{escape(title)}</text>')

    # Axes
    ox, oy = canvas.px(0.0, 0.0)
    ex, _ = canvas.px(x_max, 0.0)
    _, ey = canvas.px(0.0, y_max)
    lines.append(f'<line class="axis" x1="{_fmt(ox)}" y1="{_fmt(oy)}" x2="{_fmt(ex)}" y2="{_fmt(oy)}" stroke="#000000"/>')
    lines.append(f'<line class="axis" x1="{_fmt(ox)}" y1="{_fmt(oy)}" x2="{_fmt(ox)}" y2="{_fmt(ey)}" stroke="#000000"/>')
    for i in range(1, 6):
        gx = x_max * i / 6
        tx, _ = canvas.px(gx, 0.0)
        lines.append(f'<line x1="{_fmt(tx)}" y1="{_fmt(oy)}" x2="{_fmt(tx)}" y2="{_fmt(oy + 5)}" stroke="#000000"/>')
        lines.append(f'<text x="{_fmt(tx)}" y="{_fmt(oy + 18)}" text-anchor="middle" font-family="sans-serif" '
                     f'font-size="10">{gx ** scale.root:.4g}</text>')
    lines.append(f'<text x="{_fmt(ox + canvas.plot_w / 2)}" y="{_fmt(options.height - m / 4)}" '
                 f'text-anchor="middle" font-family="sans-serif" font-size="12">TTF</text>')

    # State lines
    for state in chart.state_lines:
        _, sy = canvas.px(0.0, scale.apply(state.times.center))
        lines.append(f'<line class="state-line" x1="{_fmt(ox)}" y1="{_fmt(sy)}" x2="{_fmt(ex)}" '
                     f'y2="{_fmt(sy)}" stroke="#999999" stroke-width="1"/>')
        lines.append(f'<text x="{_fmt(ox - 6)}" y="{_fmt(sy + 4)}" text-anchor="end" font-family="sans-serif" '
                     f'font-size="11">{escape(state.label)}</text>')

    # Angular limits
    for which, (stroke, dash) in LIMIT_STYLES.items():
        if chart.design is ChartDesign.STANDARD:
            limits = chart.states[0].limits
            theta = {'lower': limits.theta_L, 'center': limits.theta_C, 'upper': limits.theta_U}[which]
            rad = math.radians(theta)
            end = canvas.clip_ray(math.cos(rad), math.sin(rad))
            path = [(0.0, 0.0), end]
        else:
            path = limit_polyline(chart, which)
            path.append(canvas.clip_ray(*path[-1]))
        lines.append(_polyline([canvas.px(x, y) for x, y in path], stroke, dash, css=f"acl-{which}"))

    # Observation points, grouped per state line
    coords = point_coordinates(chart)
    by_state: Dict[str, List[Tuple[ClassifiedPoint, Point]]] = {}
    for point, xy in zip(chart.points, coords):
        by_state.setdefault(point.state_label, []).append((point, canvas.px(*xy)))

    for state in chart.state_lines:
        for group in _coincidence_groups(by_state.get(state.label, []), options.marker_radius):
            for k, (point, (px, py)) in enumerate(group):
                color = options.colors.get(point.status.value, "#000000")
                lines.append(
                    f'<circle class="point {point.status.value}" data-seq="{point.observation.seq}" '
                    f'cx="{_fmt(px)}" cy="{_fmt(py - k * options.coincidence_offset)}" '
                    f'r="{_fmt(options.marker_radius)}" fill="{color}"/>'
                )
            if len(group) > 1:
                _, (px, py) = group[0]
                top = py - (len(group) - 1) * options.coincidence_offset
                lines.append(f'<text class="multiplicity" x="{_fmt(px + options.marker_radius + 2)}" '
                             f'y="{_fmt(top - options.marker_radius)}" font-family="sans-serif" '
                             f'font-size="9">x{len(group)}</text>')

    lines.append('</svg>')
    logger.debug(f"Rendered SVG with {len(chart.points)} point(s), {len(chart.states)} state line(s)")
    return "\n".join(lines) + "\n"
