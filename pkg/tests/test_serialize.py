import json

import pytest

from antiramsey import block_blocker, decide_arrow, kron_blocker, singer_blocker, singer_difference_set, plane_from_difference_set
from antiramsey import ar_vertex, extend_rows
from antiramsey import serialize
from antiramsey.errors import ParseError
from antiramsey.latin import SubrectangleWitness

OUTPUTS = [singer_blocker(2), singer_blocker(5), block_blocker(2, 3), block_blocker(3, 4),
           kron_blocker(singer_blocker(2), singer_blocker(2)), extend_rows(singer_blocker(3), 9)]


@pytest.mark.parametrize("R", OUTPUTS)
def test_text_round_trip(R):
    text = serialize.to_text(R)
    assert text.endswith("\n")
    assert serialize.from_text(text) == R
    assert serialize.load_rectangle(text) == R


@pytest.mark.parametrize("R", OUTPUTS)
def test_json_round_trip(R):
    text = serialize.to_json(R)
    assert list(json.loads(text)) == ["rows", "cols", "cells"]
    assert serialize.from_json(text) == R
    assert serialize.load_rectangle(text) == R


def test_text_comments_and_blank_lines():
    assert serialize.parse_text_grid("# a grid\n0 1\n\n1 0  # second row\n") == [[0, 1], [1, 0]]


@pytest.mark.parametrize("bad", ["", "0 x\n", "# only a comment\n"])
def test_bad_text(bad):
    with pytest.raises(ParseError):
        serialize.parse_text_grid(bad)


@pytest.mark.parametrize("bad", ['{"rows": 1}', '{"rows": 2, "cols": 1, "cells": [[0]]}', "{nope"])
def test_bad_json(bad):
    with pytest.raises(ParseError):
        serialize.parse_json_grid(bad)


def test_witness_round_trip():
    w = SubrectangleWitness((0, 2), (1, 3, 4), "ba")
    assert serialize.witness_from_json(serialize.witness_to_json(w)) == w


def test_plane_json_fields():
    D = singer_difference_set(2)
    obj = json.loads(serialize.plane_to_json(plane_from_difference_set(D), D))
    assert list(obj) == ["q", "modulus_poly", "D", "lines"]
    assert obj["q"] == 2 and obj["D"] == [0, 1, 3] and len(obj["lines"]) == 7


def test_decision_json_fields():
    obj = json.loads(serialize.decision_to_json(decide_arrow(2, 3, 2, 2)))
    assert list(obj) == ["arrows", "certificate", "nodes", "ms"]
    assert obj["arrows"] is False and obj["certificate"]["cells"] == [[0, 1, 2], [1, 2, 0]]


def test_result_json():
    obj = json.loads(serialize.ar_result_to_json(ar_vertex(2, 2)))
    assert obj["value"] == 6 and obj["witness"] == [2, 4] and obj["complete"] is True
