import pytest
from hypothesis import given, settings, strategies as st

import oracle
from digifreeze import (C1, C2, DigitalImage, NotADiskError, box, boundary, find_bounding_curves, interior,
                        interior_angle, is_closed_curve, is_digitally_convex, maximal_segments,
                        validate_bounding_curve)
from digifreeze.planar import CurveError, curve_pool, enumerate_cycles
from digifreeze.scenarios import clipped_square, convex_pentagon, diamond, notched_rectangle, two_holes

DIAMOND_CURVE = [(1, 0), (0, 1), (-1, 0), (0, -1)]
# the 11-point minimal curve of the clipped square, cutting the corner at (3,3)
CLIPPED_MINIMAL = ((0, 0), (1, 0), (2, 0), (3, 0), (3, 1), (3, 2), (2, 3), (1, 3), (0, 3), (0, 2), (0, 1))


def test_boundary_examples():
    X = clipped_square()
    assert sorted(boundary(X)) == sorted(set(X.points) - {(1, 1), (1, 2), (2, 1), (2, 2)})
    assert (2, 2) not in boundary(X)
    assert sorted(boundary(diamond())) == sorted(DIAMOND_CURVE)
    assert interior(diamond()) == ((0, 0),)
    assert boundary([(7, 7)]) == ((7, 7),)


@settings(max_examples=60, deadline=None)
@given(st.sets(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=16))
def test_boundary_matches_definition(pts):
    assert sorted(boundary(pts)) == oracle.boundary(pts)
    assert sorted(boundary(pts) + interior(pts)) == sorted(pts)


def test_closed_curve_examples():
    cyc = is_closed_curve(DIAMOND_CURVE, C2)
    assert cyc.simple and len(cyc) == 4
    assert not is_closed_curve(CLIPPED_MINIMAL, C2).simple
    with pytest.raises(CurveError) as err:
        is_closed_curve([(0, 0), (1, 0), (3, 0)], C2)
    assert err.value.index == 1
    with pytest.raises(CurveError):
        is_closed_curve([(0, 0), (1, 0), (0, 0), (1, 1)], C2)


def test_closed_curve_accepts_repeated_start():
    assert len(is_closed_curve(DIAMOND_CURVE + [DIAMOND_CURVE[0]], C2)) == 4


def test_jordan_sizes():
    with pytest.raises(CurveError):
        is_closed_curve(DIAMOND_CURVE, C1, jct=True)
    assert is_closed_curve(DIAMOND_CURVE, C2, jct=True).simple


def test_validate_accepts_traced_curve():
    X = clipped_square()
    dec = validate_bounding_curve(X, find_bounding_curves(X, "canonical")[0].curve)
    assert dec.size == 12
    assert (2, 2) in dec.curve.points
    assert sorted(dec.curve_interior) == [(1, 1), (1, 2), (2, 1)]


def test_validate_diamond():
    dec = validate_bounding_curve(diamond(), DIAMOND_CURVE)
    assert dec.curve_interior == ((0, 0),)


def test_validate_two_holes_rejected():
    X = two_holes()
    ring = [(x, 0) for x in range(7)] + [(6, 1), (6, 2), (5, 2), (4, 2), (3, 1), (2, 2), (1, 2), (0, 2), (0, 1)]
    with pytest.raises(NotADiskError) as err:
        validate_bounding_curve(X, ring)
    assert err.value.clause == "several-bounded"
    assert err.value.bounded == [[(1, 1), (2, 1)], [(4, 1), (5, 1)]]


def test_validate_rejects_mismatch_and_no_interior():
    with pytest.raises(NotADiskError) as err:
        validate_bounding_curve(box(2, 2).points + ((5, 5),), find_bounding_curves(box(2, 2))[0].curve)
    assert err.value.clause == "mismatch"
    with pytest.raises(NotADiskError) as err:
        validate_bounding_curve(box(1, 1), [(0, 0), (1, 0), (1, 1), (0, 1)])
    assert err.value.clause == "no-bounded"


def test_find_curves_minimal_clipped_square():
    X = clipped_square()
    curves = find_bounding_curves(X, "all")
    assert min(d.size for d in curves) == 11
    minimal = find_bounding_curves(X, "minimal")[0]
    assert minimal.curve.points == CLIPPED_MINIMAL
    assert find_bounding_curves(X, "canonical")[0].size == 12


def test_find_curves_diamond_unique():
    curves = find_bounding_curves(diamond(), "all")
    assert len(curves) == 1 and sorted(curves[0].curve.points) == sorted(DIAMOND_CURVE)


def test_find_curves_non_disks():
    assert find_bounding_curves(two_holes(), "canonical") == []
    assert find_bounding_curves(two_holes(), "all") == []
    assert find_bounding_curves(box(1, 1), "canonical") == []


def test_find_curves_all_refuses_large():
    with pytest.raises(ValueError, match="minimal"):
        find_bounding_curves(box(7, 7), "all")


def test_every_enumerated_curve_validates():
    # every curve in "all" mode is an independent bounding curve of the disk
    X = clipped_square()
    for dec in find_bounding_curves(X, "all"):
        again = validate_bounding_curve(X, dec.curve)
        assert oracle.bounded_complement(dec.curve.points) == [sorted(again.curve_interior)]


def test_segments_convex_pentagon():
    dec = is_digitally_convex(convex_pentagon()).curve
    segs = maximal_segments(dec)
    slanted = [s for s in segs.segments if s.slanted]
    assert len(segs.segments) == 5 and len(slanted) == 1
    assert sorted(slanted[0].points) == [(0, 2), (1, 3), (2, 4)]


def test_segments_rectangle_and_diamond():
    segs = maximal_segments(find_bounding_curves(box(4, 2))[0])
    assert len(segs.segments) == 4 and not any(s.slanted for s in segs.segments)
    segs = maximal_segments(find_bounding_curves(diamond())[0])
    assert len(segs.segments) == 4 and all(s.slanted and len(s) == 2 for s in segs.segments)


def test_interior_angles():
    assert interior_angle(find_bounding_curves(box(4, 4))[0], (4, 4)) == 90
    assert interior_angle(is_digitally_convex(convex_pentagon()).curve, (2, 4)) == 135
    assert interior_angle(find_bounding_curves(diamond())[0], (1, 0)) == 90
    with pytest.raises(ValueError):
        interior_angle(find_bounding_curves(box(4, 4))[0], (2, 0))


def test_angle_sum_of_simple_curve():
    # exterior turning of a simple counterclockwise polygon is 360 degrees
    for X in (box(4, 2), diamond(), notched_rectangle()):
        dec = find_bounding_curves(X)[0]
        segs = maximal_segments(dec)
        assert sum(180 - a for _, a in segs.angles) == 360


def test_turn_restricted_cycles_are_a_subset():
    X = convex_pentagon()
    pool, bd = curve_pool(X), boundary(X)
    turns = [(0, 0), (4, 0), (4, 4), (2, 4), (0, 2)]
    restricted = {tuple(c) for c in enumerate_cycles(pool, bd, turns=turns)}
    full = {tuple(c) for c in enumerate_cycles(pool, bd)}
    assert restricted and restricted <= full


def test_image_must_be_planar():
    with pytest.raises(ValueError):
        find_bounding_curves(DigitalImage(((0, 0, 0),), 3))
