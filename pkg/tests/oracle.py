"""Brute-force reference implementations used only by the tests.

Nothing here imports the package: every routine works from the bare
definitions on plain tuples so it can check the library from the outside.
"""

import itertools
from collections import deque


def adjacent(p, q, order):
    diff = [abs(a - b) for a, b in zip(p, q)]
    return p != q and max(diff) <= 1 and sum(d != 0 for d in diff) <= order


def adjacent_or_equal(p, q, order):
    return p == q or adjacent(p, q, order)


def neighbors(p, order):
    for d in itertools.product((-1, 0, 1), repeat=len(p)):
        if any(d) and sum(c != 0 for c in d) <= order:
            yield tuple(a + b for a, b in zip(p, d))


def boundary(pts):
    s = set(pts)
    return sorted(p for p in s if any(q not in s for q in neighbors(p, 1)))


def components(pts, order):
    left, out = set(pts), []
    while left:
        start = min(left)
        left.discard(start)
        comp, queue = [start], deque([start])
        while queue:
            p = queue.popleft()
            for q in neighbors(p, order):
                if q in left:
                    left.discard(q)
                    comp.append(q)
                    queue.append(q)
        out.append(sorted(comp))
    return sorted(out)


def bounded_complement(curve_pts):
    """Bounded 4-components of Z^2 minus the given points, by flood fill from a padded frame."""
    s = set(curve_pts)
    xs, ys = [p[0] for p in s], [p[1] for p in s]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    free = {(x, y) for x in range(x0, x1 + 1) for y in range(y0, y1 + 1)} - s
    comps = components(free, 1)
    return sorted(c for c in comps if not any(p[0] in (x0, x1) or p[1] in (y0, y1) for p in c))


def continuous_maps(pts, order, pinned=()):
    """All continuous self-maps as dicts, by trying every function."""
    pts = sorted(pts)
    pinned = set(pinned)
    pairs = [(i, j) for i, j in itertools.combinations(range(len(pts)), 2) if adjacent(pts[i], pts[j], order)]
    choices = [[p] if p in pinned else pts for p in pts]
    for img in itertools.product(*choices):
        if all(adjacent_or_equal(img[i], img[j], order) for i, j in pairs):
            yield dict(zip(pts, img))


def freezes(pts, order, A):
    return all(all(f[p] == p for p in f) for f in continuous_maps(pts, order, A))


def _cross(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _in_triangle(p, a, b, c):
    d1, d2, d3 = _cross(a, b, p), _cross(b, c, p), _cross(c, a, p)
    return not ((min(d1, d2, d3) < 0) and (max(d1, d2, d3) > 0))


def hull_vertices(pts):
    """Points of the set that are not in the closed hull of the others."""
    pts = sorted(set(pts))
    out = []
    for p in pts:
        rest = [q for q in pts if q != p]
        covered = False
        for a, b in itertools.combinations(rest, 2):
            if _cross(a, b, p) == 0 and min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) \
                    and min(a[1], b[1]) <= p[1] <= max(a[1], b[1]):
                covered = True
                break
        if not covered:
            for a, b, c in itertools.combinations(rest, 3):
                if _cross(a, b, c) != 0 and _in_triangle(p, a, b, c):
                    covered = True
                    break
        if not covered:
            out.append(p)
    return out
