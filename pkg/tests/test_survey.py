import itertools

import pytest

import oracle
from digifreeze import search_open_question
from digifreeze.survey import canonical_form, examine, hv_convex_sets


def _classes_by_subsets(n):
    """Symmetry classes of 4-connected row/column-convex sets in an n x n box, from all 2^(n*n) subsets."""
    cells = [(x, y) for x in range(n) for y in range(n)]
    seen = set()
    for mask in range(1, 1 << len(cells)):
        pts = [c for i, c in enumerate(cells) if mask >> i & 1]
        if len(oracle.components(pts, 1)) != 1:
            continue
        ok = True
        for axis in (0, 1):
            lines = {}
            for p in pts:
                lines.setdefault(p[axis], []).append(p[1 - axis])
            ok &= all(max(v) - min(v) + 1 == len(v) for v in lines.values())
        if not ok:
            continue
        forms = []
        for sx, sy, swap in itertools.product((1, -1), (1, -1), (False, True)):
            img = [(sy * y, sx * x) if swap else (sx * x, sy * y) for x, y in pts]
            x0, y0 = min(p[0] for p in img), min(p[1] for p in img)
            forms.append(tuple(sorted((x - x0, y - y0) for x, y in img)))
        seen.add(min(forms))
    return seen


@pytest.mark.parametrize("n", [3, 4])
def test_enumeration_matches_subset_oracle(n):
    ours = set()
    for w in range(1, n + 1):
        for h in range(1, n + 1):
            for pts in hv_convex_sets(w, h):
                ours.add(canonical_form(pts, n, n))
    assert ours == _classes_by_subsets(n)


def test_one_by_one_is_vacuous():
    rep = search_open_question(1, 1)
    assert rep.classes == 1 and rep.disks == 0
    assert rep.summary.startswith("vacuous")


def test_three_by_three():
    rep = search_open_question(3, 3)
    assert (rep.classes, rep.disks, rep.convex, rep.thick_existential, rep.thick_universal) == (25, 6, 6, 6, 6)
    assert rep.counterexamples == [] and rep.summary == "no counterexample up to bounds"


@pytest.fixture(scope="module")
def four_by_four():
    return search_open_question(4, 4)


def test_four_by_four_frozen_counts(four_by_four):
    rep = four_by_four
    assert (rep.classes, rep.disks, rep.convex) == (260, 124, 36)
    assert rep.thick_existential == 36 and rep.counterexamples == []
    assert len(rep.universal_counterexamples) == 1


def test_universal_failure_has_a_thick_curve_too(four_by_four):
    res = examine(four_by_four.universal_counterexamples[0])
    assert res["convex"] and res["existential"] and not res["universal"]


def test_bounds_refused():
    with pytest.raises(ValueError):
        search_open_question(7, 3)
    with pytest.raises(ValueError):
        search_open_question(0, 3)
    assert search_open_question(2, 2, limit=2).disks == 0


def test_parallel_merge_matches_serial():
    assert search_open_question(3, 4, workers=2).to_dict() == search_open_question(3, 4).to_dict()
