import pytest

from digifreeze import C1, DigitalImage, Overlays, SelfMap, c1_candidate, find_witness, is_digitally_convex, render
from digifreeze.render import RenderError, witness_arrows
from digifreeze.scenarios import CORNER_SET_C1, convex_pentagon, notched_rectangle


def test_bare_grid():
    X = DigitalImage.from_points([(0, 0), (1, 0), (1, 1)])
    assert render(X) == ".#\n##\n\norigin (0,0) at bottom left\n#  member\n.  not a member\n"


def test_empty_image():
    assert render(DigitalImage((), 2)).startswith("\nempty image")


def test_pentagon_marked_a():
    X = convex_pentagon()
    dec = is_digitally_convex(X).curve
    text = render(X, Overlays(candidate=c1_candidate(dec).points, curve=dec.curve.points))
    rows = text.split("\n")[:5]
    assert rows == ["..aoa", ".a##o", "a###o", "o###o", "aoooa"]
    assert "a  candidate set" in text and "o  curve" in text


def test_witness_arrow_single_move():
    D = notched_rectangle()
    f = SelfMap.from_mapping(D, {(0, 0): (1, 1)})
    assert witness_arrows(f) == [((0, 0), (1, 1))]
    text = render(D, Overlays(witness=f))
    assert text.rstrip().endswith("(0, 0) -> (1, 1)")
    svg = render(D, Overlays(witness=f), "svg")
    assert svg.count("<line") == 1 and 'marker-end="url(#arrow)"' in svg


def test_svg_is_deterministic():
    D = notched_rectangle()
    f = find_witness(D, C1, CORNER_SET_C1[1:])
    ov = Overlays(boundary=CORNER_SET_C1, candidate=CORNER_SET_C1[1:], label="a", witness=f)
    first = render(D, ov, "svg")
    assert first == render(D, ov, "svg")
    assert first.count("<rect") == len(D) + 1
    assert "." not in first.split("viewBox")[1].split('"')[1]


def test_overlay_mismatch_rejected():
    D = notched_rectangle()
    with pytest.raises(RenderError):
        render(D, Overlays(curve=[(3, 3)]))
    with pytest.raises(RenderError):
        render(D, Overlays(witness={(0, 0): (9, 9)}))
    with pytest.raises(RenderError):
        render(D, Overlays(label="ab"))
    with pytest.raises(RenderError):
        render(D, fmt="png")
