import json
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from digifreeze import C1, DigitalImage, ParseError, emit, parse_image
from digifreeze.io import ImageDocument, read_image
from digifreeze.scenarios import notched_rectangle

DATA = Path(__file__).resolve().parent.parent / "data"

NOTCHED = """@name notched
@adjacency c1
####
####
####
###.
####
####
####
"""


def test_parse_notched_grid():
    doc = parse_image(NOTCHED)
    assert doc.image == notched_rectangle()
    assert doc.adjacency == C1 and doc.name == "notched"
    assert (0, 6) in doc.image and (3, 3) not in doc.image


def test_origin_shifts_points():
    doc = parse_image("@origin -2 5\n#.\n.#\n")
    assert doc.image.points == ((-2, 6), (-1, 5))


def test_empty_grid():
    assert len(parse_image("").image) == 0
    assert len(parse_image("@name nothing\n").image) == 0


@pytest.mark.parametrize("text, line, column", [
    ("##\n#x\n", 2, 2),
    ("###\n##\n", 2, 3),
    ("##\n@name late\n", 2, 1),
    ("@bogus 1\n#\n", 1, 1),
    ("@origin 1\n#\n", 1, 1),
    ("@curve 0,0 1;1\n#\n", 1, 12),
])
def test_grid_errors_point_at_location(text, line, column):
    with pytest.raises(ParseError) as err:
        parse_image(text)
    assert (err.value.line, err.value.column) == (line, column)


def test_structured_errors():
    with pytest.raises(ParseError, match="duplicate"):
        parse_image('{"points": [[0, 0], [0, 0]]}')
    with pytest.raises(ParseError, match="unknown fields"):
        parse_image('{"points": [], "colour": 1}')
    with pytest.raises(ParseError) as err:
        parse_image('{"points": [[0, 0]],\n "name": }')
    assert err.value.line == 2
    with pytest.raises(ParseError, match="mixed"):
        parse_image('{"points": [[0, 0], [0, 0, 1]]}')


def test_structured_three_dimensional():
    doc = parse_image('{"points": [[0, 0, 0], [0, 0, 1]], "adjacency": "c3"}')
    assert doc.image.dimension == 3 and doc.adjacency.order == 3


def test_declared_curve_validates():
    text = "@curve 1,0 0,1 -1,0 0,-1\n@origin -1 -1\n.#.\n###\n.#.\n"
    doc = parse_image(text)
    assert doc.bounding_curve().curve_interior == ((0, 0),)


def test_read_shipped_files():
    doc = read_image(DATA / "notched_rectangle.txt")
    assert doc.image == notched_rectangle()
    corners = read_image(DATA / "notched_corners.json")
    assert len(corners.image) == 6


def test_round_trip_grid_and_structured():
    doc = parse_image(NOTCHED)
    assert parse_image(emit(doc)) == doc
    again = parse_image(emit(doc, "structured"))
    assert again.image == doc.image and again.adjacency == doc.adjacency and again.name == doc.name
    assert emit(parse_image(emit(doc, "structured")), "structured") == emit(doc, "structured")
    assert json.loads(emit(doc, "structured"))["points"][0] == [0, 0]


@settings(max_examples=60, deadline=None)
@given(st.sets(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), max_size=20))
def test_round_trip_property(pts):
    doc = ImageDocument(DigitalImage.from_points(pts, 2))
    for fmt in ("grid", "structured"):
        text = emit(doc, fmt)
        back = parse_image(text)
        assert back.image == doc.image
        assert emit(back, fmt) == text
