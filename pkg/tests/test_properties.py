"""Known theorems as properties of small random images, checked by the product oracle."""

import random

from hypothesis import given, settings, strategies as st

import oracle
from digifreeze import Adjacency, DigitalImage, boundary, find_bounding_curves, find_witness
from digifreeze.scenarios import random_image

seeds = st.integers(0, 2 ** 32 - 1)


def _image(seed, max_points=7):
    return random_image(random.Random(seed), max_points)


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 2))
def test_boundary_freezes(seed, u):
    X = _image(seed)
    assert find_witness(X, Adjacency(2, u), boundary(X)) is None
    assert oracle.freezes(X.points, u, oracle.boundary(X.points))


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 2))
def test_bounding_curves_freeze(seed, u):
    X = _image(seed, 9)
    if len(X) < 5:
        return
    for dec in find_bounding_curves(X, "all"):
        assert find_witness(X, Adjacency(2, u), dec.curve.points) is None


@settings(max_examples=40, deadline=None)
@given(seeds, st.integers(1, 2), st.data())
def test_freezing_is_monotone(seed, u, data):
    X = _image(seed)
    adj = Adjacency(2, u)
    A = data.draw(st.sets(st.sampled_from(X.points)))
    if find_witness(X, adj, A) is None:
        extra = data.draw(st.sampled_from(X.points))
        assert find_witness(X, adj, A | {extra}) is None


def test_disconnected_image_never_frozen_by_one_component():
    X = DigitalImage.from_points([(0, 0), (1, 0), (5, 5), (6, 5)])
    assert find_witness(X, Adjacency(2, 1), [(0, 0), (1, 0)]) is not None
