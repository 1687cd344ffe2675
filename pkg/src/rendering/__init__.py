"""Chart rendering."""

from .svg_renderer import RenderError, RenderOptions, limit_polyline, point_coordinates, render_svg

__all__ = ['RenderError', 'RenderOptions', 'limit_polyline', 'point_coordinates', 'render_svg']
