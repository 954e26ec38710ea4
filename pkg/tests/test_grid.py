import pytest
from hypothesis import given, settings, strategies as st

import oracle
from digifreeze import (C1, C2, Adjacency, DigitalImage, adjacency, are_adjacent, box, closed_neighborhood,
                        components, connected_components, is_connected, unique_shortest_path)
from digifreeze.scenarios import clipped_square, diamond, notched_rectangle, two_holes

points2 = st.tuples(st.integers(-3, 3), st.integers(-3, 3))


def test_adjacency_examples():
    assert not are_adjacent((0, 0), (1, 1), C1)
    assert are_adjacent((0, 0), (1, 1), C2)
    assert not are_adjacent((5, 5), (5, 5), C2)
    assert not are_adjacent((0, 0), (2, 0), C2)


def test_adjacency_dimension_mismatch():
    with pytest.raises(ValueError):
        are_adjacent((0, 0), (0, 0, 1), C1)
    with pytest.raises(ValueError):
        Adjacency(2, 3)


def test_adjacency_parse():
    assert adjacency("c2") == C2
    assert adjacency(1, 3) == Adjacency(3, 1)
    with pytest.raises(ValueError):
        adjacency("k4")


@given(points2, points2, st.integers(1, 2))
def test_adjacency_matches_definition(p, q, u):
    assert are_adjacent(p, q, Adjacency(2, u)) == oracle.adjacent(p, q, u)


@given(points2, points2)
def test_c1_implies_c2_and_symmetry(p, q):
    if are_adjacent(p, q, C1):
        assert are_adjacent(p, q, C2)
    assert are_adjacent(p, q, C2) == are_adjacent(q, p, C2)


def test_closed_neighborhood_examples():
    assert sorted(closed_neighborhood(diamond(), C1, (0, 0))) == sorted(diamond().points)
    single = DigitalImage(((0, 0),))
    assert list(closed_neighborhood(single, C2, (0, 0))) == [(0, 0)]
    nb = closed_neighborhood(clipped_square(), C2, (2, 2))
    assert len(nb) == 8 and (3, 3) not in nb


def test_closed_neighborhood_rejects_outsider():
    with pytest.raises(ValueError):
        closed_neighborhood(diamond(), C1, (5, 5))


def test_image_canonical_order_and_duplicates():
    X = DigitalImage(((1, 0), (0, 0)))
    assert X.points == ((0, 0), (1, 0))
    with pytest.raises(ValueError):
        DigitalImage(((0, 0), (0, 0)))


def test_connectedness_examples():
    S = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    assert not is_connected(S, C1)
    assert is_connected(S, C2)
    assert is_connected([(4, 4)], C1)


def test_complement_components_of_two_hole_curve():
    X = two_holes()
    ring = [p for p in X if p[1] in (0, 2) or p[0] in (0, 6)] + [(3, 1)]
    comp = connected_components(ring, C1)
    assert comp.bounded == [[(1, 1), (2, 1)], [(4, 1), (5, 1)]]
    assert comp.infinite


def test_complement_components_match_flood_fill():
    curve = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    assert connected_components(curve, C1).bounded == oracle.bounded_complement(curve) == [[(0, 0)]]


def test_complement_of_empty_set_is_unbounded():
    comp = connected_components([], C1)
    assert comp.bounded == [] and comp.infinite


@settings(max_examples=60, deadline=None)
@given(st.sets(points2, max_size=14), st.integers(1, 2))
def test_components_match_bfs(pts, u):
    assert sorted(components(pts, Adjacency(2, u))) == oracle.components(pts, u)


def test_unique_shortest_path_examples():
    D = notched_rectangle()
    path = unique_shortest_path(D, C1, (0, 0), (0, 6))
    assert path.points == tuple((0, y) for y in range(7))
    assert unique_shortest_path(D, C1, (2, 2), (2, 2)).points == ((2, 2),)
    assert unique_shortest_path(box(1, 1), C1, (0, 0), (1, 1)) is None


def test_unique_shortest_path_requires_members():
    with pytest.raises(ValueError):
        unique_shortest_path(box(1, 1), C1, (0, 0), (5, 5))


def test_box_size():
    assert len(box(3, 6)) == 28
    assert box(2, 2, 2).dimension == 3
    assert len(notched_rectangle()) == 27
