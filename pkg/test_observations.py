"""Tests for observation CSV ingestion and export."""

import io

import pytest

from src.charts import Observation
from src.processing import (
    ObservationParseError,
    format_observations,
    parse_observations,
    read_observations,
    write_observations,
)


def parse(text, system=None):
    return parse_observations(io.StringIO(text), system, source="obs.csv")


def test_labels_and_indices(example1_system):
    observations = parse("seq,state,ttf\n1,S1,10.5\n2,3,0\n3, S2 ,7\n", example1_system)
    assert observations == [
        Observation(seq=1, state_index=1, ttf=10.5),
        Observation(seq=2, state_index=3, ttf=0.0),
        Observation(seq=3, state_index=2, ttf=7.0),
    ]


def test_indices_without_system():
    assert parse("seq,state,ttf\n1,2,3.5\n")[0].state_index == 2


def test_blank_lines_are_skipped(example1_system):
    assert len(parse("seq,state,ttf\n1,S1,1\n\n2,S1,2\n", example1_system)) == 2


def test_example_files(example1_observations, example2_observations, example3_observations):
    assert len(example1_observations) == 50
    assert len(example2_observations) == 24
    assert len(example3_observations) == 50
    assert example1_observations[32] == Observation(seq=33, state_index=1, ttf=1296.80)


@pytest.mark.parametrize("text,message", [
    ("", "empty file"),
    ("id,state,ttf\n1,S1,1\n", "header"),
    ("seq,state,ttf\n1,S1\n", "row 2"),
    ("seq,state,ttf\n1,S1,abc\n", "row 2"),
    ("seq,state,ttf\n1,S1,-4\n", "row 2"),
    ("seq,state,ttf\n1,S1,nan\n", "row 2"),
    ("seq,state,ttf\n1,S1,1\n1,S1,2\n", "row 3"),
    ("seq,state,ttf\n1,S1,1\n2,,2\n", "row 3"),
    ("seq,state,ttf\n1,S1,1\n2,S1,2\n3,S7,1\n", "row 4"),
])
def test_parse_errors_name_the_row(example1_system, text, message):
    with pytest.raises(ObservationParseError, match=message):
        parse(text, example1_system)


def test_unknown_label_is_named(example1_system):
    with pytest.raises(ObservationParseError, match="'S7'"):
        parse("seq,state,ttf\n1,S7,1\n", example1_system)


def test_missing_file(tmp_path):
    with pytest.raises(ObservationParseError, match="cannot read"):
        read_observations(tmp_path / "missing.csv")


def test_format_uses_labels_and_two_decimals():
    text = format_observations(
        [Observation(seq=1, state_index=2, ttf=3.14159), Observation(seq=2, state_index=1, ttf=10)],
        labels=["S1", "S2"],
    )
    assert text == "seq,state,ttf\n1,S2,3.14\n2,S1,10.00\n"


def test_write_then_read(tmp_path, example1_system, example1_observations):
    path = write_observations(tmp_path / "sub" / "out.csv", example1_observations, example1_system.labels)
    assert read_observations(path, example1_system) == example1_observations
    again = write_observations(tmp_path / "again.csv", example1_observations, example1_system.labels)
    assert path.read_bytes() == again.read_bytes()
