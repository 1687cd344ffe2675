"""Observation file processing."""

from .observations import (
    ObservationParseError,
    format_observations,
    parse_observations,
    read_observations,
    write_observations,
)

__all__ = [
    'ObservationParseError',
    'format_observations',
    'parse_observations',
    'read_observations',
    'write_observations',
]
