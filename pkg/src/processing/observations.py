"""Observation CSV ingestion and export (``seq,state,ttf``)."""

import csv
import io
import math
from pathlib import Path
from typing import List, Optional, Sequence, TextIO, Union

from ..charts.models import Observation, SystemModel
from ..errors import ACCError
from ..utils.logger import get_logger

HEADER = ["seq", "state", "ttf"]

logger = get_logger("acc.processing")


class ObservationParseError(ACCError):
    """Malformed observation file."""
    pass


def parse_observations(
    stream: TextIO,
    system: Optional[SystemModel] = None,
    source: str = "<stream>",
) -> List[Observation]:
    """
    Parse observations from CSV text.

    Args:
        stream: Text stream with header ``seq,state,ttf``
        system: Resolves state labels; without it states must be 1-based indices
        source: Name used in error messages

    Returns:
        Observations in file order

    Raises:
        ObservationParseError: bad header, unknown state, bad number or
            non-increasing seq (row number named)
    """
    reader = csv.reader(stream)
    try:
        header = [cell.strip().lower() for cell in next(reader)]
    except StopIteration:
        raise ObservationParseError(f"{source}: empty file, expected header {','.join(HEADER)}") from None
    if header != HEADER:
        raise ObservationParseError(f"{source}: header must be {','.join(HEADER)}, got {','.join(header)}")

    observations: List[Observation] = []
    last_seq = 0
    for row in reader:
        line = reader.line_num
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != 3:
            raise ObservationParseError(f"{source}, row {line}: expected 3 columns, got {len(row)}")
        seq_text, state_text, ttf_text = (cell.strip() for cell in row)

        try:
            seq = int(seq_text)
            ttf = float(ttf_text)
        except ValueError:
            raise ObservationParseError(
                f"{source}, row {line}: seq must be an integer and ttf a number ({','.join(row)})"
            ) from None
        if not math.isfinite(ttf) or ttf < 0:
            raise ObservationParseError(f"{source}, row {line}: ttf must be a non-negative number, got {ttf_text}")
        if seq <= last_seq:
            raise ObservationParseError(f"{source}, row {line}: seq {seq} is not greater than {last_seq}")

        if not state_text:
            raise ObservationParseError(f"{source}, row {line}: missing state")
        if system is not None:
            state_index = system.resolve_state(state_text)
        else:
            state_index = int(state_text) if state_text.isdigit() and int(state_text) >= 1 else None
        if state_index is None:
            raise ObservationParseError(f"{source}, row {line}: unknown state '{state_text}'")

        observations.append(Observation(seq=seq, state_index=state_index, ttf=ttf))
        last_seq = seq

    logger.debug(f"{source}: {len(observations)} observation(s)")
    return observations


def read_observations(path: Union[str, Path], system: Optional[SystemModel] = None) -> List[Observation]:
    """Read an observation CSV file."""
    path = Path(path)
    try:
        with open(path, 'r', encoding='utf-8', newline='') as f:
            return parse_observations(f, system, source=str(path))
    except OSError as e:
        raise ObservationParseError(f"cannot read {path}: {e}") from e


def format_observations(
    observations: Sequence[Observation],
    labels: Optional[Sequence[str]] = None,
    decimals: int = 2,
) -> str:
    """CSV text; states written as labels when given, else as 1-based indices."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(HEADER)
    for observation in observations:
        state = labels[observation.state_index - 1] if labels else observation.state_index
        writer.writerow([observation.seq, state, f"{observation.ttf:.{decimals}f}"])
    return buffer.getvalue()


def write_observations(
    path: Union[str, Path],
    observations: Sequence[Observation],
    labels: Optional[Sequence[str]] = None,
    decimals: int = 2,
) -> Path:
    """Write observations as CSV (byte-stable for identical input)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(format_observations(observations, labels, decimals), encoding='utf-8', newline='')
    logger.info(f"Wrote {len(observations)} observation(s) to {path}")
    return path
