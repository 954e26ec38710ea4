"""Lattice points, c_u adjacency, neighborhoods, paths and connectivity.

Points are plain tuples of ints. A :class:`DigitalImage` is a finite set of
points kept in lexicographic order, so every set-valued result in the package
comes back in that order.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple, Sequence

import numpy as np
from scipy import ndimage

Point = tuple[int, ...]


@dataclass(frozen=True)
class Adjacency:
    """The c_u adjacency on Z^n: neighbors differ by 1 in at most ``order`` coordinates."""

    dimension: int = 2
    order: int = 1

    def __post_init__(self):
        if self.dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dimension}")
        if not 1 <= self.order <= self.dimension:
            raise ValueError(f"order must lie in [1, {self.dimension}], got {self.order}")

    @property
    def name(self) -> str:
        return f"c{self.order}"

    def offsets(self) -> tuple[Point, ...]:
        return _offsets(self.dimension, self.order)

    def __str__(self):
        return self.name


C1 = Adjacency(2, 1)
C2 = Adjacency(2, 2)


def adjacency(name: str | int, dimension: int = 2) -> Adjacency:
    """Parse ``'c1'``/``'c2'``/``1``/``2`` into an :class:`Adjacency`."""
    if isinstance(name, str):
        text = name.strip().lower()
        if not text.startswith("c") or not text[1:].isdigit():
            raise ValueError(f"unknown adjacency {name!r}; expected c1, c2, ...")
        order = int(text[1:])
    else:
        order = int(name)
    return Adjacency(dimension, order)


@lru_cache(maxsize=None)
def _offsets(dimension: int, order: int) -> tuple[Point, ...]:
    out = []
    for delta in itertools.product((-1, 0, 1), repeat=dimension):
        moved = sum(1 for d in delta if d)
        if 1 <= moved <= order:
            out.append(delta)
    return tuple(sorted(out))


def _check_dims(adj: Adjacency, *points: Point):
    for p in points:
        if len(p) != adj.dimension:
            raise ValueError(f"point {p} has dimension {len(p)}, adjacency expects {adj.dimension}")


def are_adjacent(p: Point, q: Point, adj: Adjacency) -> bool:
    _check_dims(adj, p, q)
    moved = 0
    for a, b in zip(p, q):
        d = abs(a - b)
        if d > 1:
            return False
        moved += d
    return 1 <= moved <= adj.order


def adjacent_or_equal(p: Point, q: Point, adj: Adjacency) -> bool:
    return p == q or are_adjacent(p, q, adj)


def lattice_neighbors(p: Point, adj: Adjacency) -> list[Point]:
    """Neighbors of ``p`` in the unrestricted lattice."""
    _check_dims(adj, p)
    return [tuple(a + d for a, d in zip(p, delta)) for delta in adj.offsets()]


@dataclass(frozen=True)
class DigitalImage:
    """A finite subset of Z^n in canonical (lexicographic) order."""

    points: tuple[Point, ...]
    dimension: int = 2
    _index: dict = field(default=None, init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        pts = tuple(tuple(int(c) for c in p) for p in self.points)
        if len(set(pts)) != len(pts):
            raise ValueError("duplicate points in image")
        for p in pts:
            if len(p) != self.dimension:
                raise ValueError(f"point {p} does not have dimension {self.dimension}")
        pts = tuple(sorted(pts))
        object.__setattr__(self, "points", pts)
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(pts)})

    @classmethod
    def from_points(cls, points: Iterable[Sequence[int]], dimension: int | None = None) -> "DigitalImage":
        pts = {tuple(int(c) for c in p) for p in points}
        if dimension is None:
            dims = {len(p) for p in pts}
            if len(dims) > 1:
                raise ValueError(f"mixed dimensions {sorted(dims)}")
            dimension = dims.pop() if dims else 2
        return cls(tuple(pts), dimension)

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(p) in self._index

    def index(self, p: Point) -> int:
        try:
            return self._index[tuple(p)]
        except KeyError:
            raise ValueError(f"{tuple(p)} is not a point of the image") from None

    def as_set(self) -> frozenset:
        return frozenset(self.points)

    def bounds(self) -> tuple[Point, Point]:
        """Inclusive bounding box ``(lo, hi)``; raises on the empty image."""
        if not self.points:
            raise ValueError("empty image has no bounding box")
        arr = np.array(self.points)
        return tuple(int(v) for v in arr.min(0)), tuple(int(v) for v in arr.max(0))

    def without(self, *removed: Point) -> "DigitalImage":
        drop = {tuple(p) for p in removed}
        return DigitalImage(tuple(p for p in self.points if p not in drop), self.dimension)


def box(*extents: int) -> DigitalImage:
    """The digital box ``[0, m_1] x ... x [0, m_n]``."""
    ranges = [range(m + 1) for m in extents]
    return DigitalImage(tuple(itertools.product(*ranges)), len(extents))


@dataclass(frozen=True)
class LatticePath:
    points: tuple[Point, ...]
    adjacency: Adjacency

    def __post_init__(self):
        if not self.points:
            raise ValueError("a path needs at least one point")
        for i, (p, q) in enumerate(zip(self.points, self.points[1:])):
            if not adjacent_or_equal(p, q, self.adjacency):
                raise ValueError(f"path breaks between index {i} and {i + 1}: {p}, {q}")

    @property
    def length(self) -> int:
        return len(self.points) - 1


def _require(X: DigitalImage, *points: Point):
    for p in points:
        if p not in X:
            raise ValueError(f"{p} is not a point of the image")


def neighborhood(X: DigitalImage, adj: Adjacency, x: Point) -> list[Point]:
    """N(X, adj, x): members of X adjacent to x (x itself excluded)."""
    _require(X, x)
    return sorted(q for q in lattice_neighbors(x, adj) if q in X)


def closed_neighborhood(X: DigitalImage, adj: Adjacency, x: Point) -> list[Point]:
    """N(X, adj, x) together with x."""
    return sorted(neighborhood(X, adj, x) + [tuple(x)])


def _components_of(points: Sequence[Point], adj: Adjacency) -> list[list[Point]]:
    pool = set(points)
    comps = []
    for start in sorted(pool):
        if start not in pool:
            continue
        pool.discard(start)
        comp, queue = [start], deque([start])
        while queue:
            p = queue.popleft()
            for q in lattice_neighbors(p, adj):
                if q in pool:
                    pool.discard(q)
                    comp.append(q)
                    queue.append(q)
        comps.append(sorted(comp))
    return comps


def is_connected(X: DigitalImage | Iterable[Point], adj: Adjacency) -> bool:
    pts = list(X)
    return len(_components_of(pts, adj)) <= 1


def components(X: DigitalImage | Iterable[Point], adj: Adjacency) -> list[list[Point]]:
    """adj-components of a finite point set, ordered by least point."""
    return _components_of(list(X), adj)


class ComplementComponents(NamedTuple):
    bounded: list[list[Point]]
    infinite: list[Point]


def connected_components(P: Iterable[Point], adj: Adjacency,
                         region: tuple[Point, Point] | None = None,
                         margin: int = 1) -> ComplementComponents:
    """Components of ``region \\ P``, split into bounded ones and the infinite one.

    The region (default: bounding box of P, or the origin when P is empty) is
    inflated by ``margin`` cells on every side; whatever touches that shell belongs to the unbounded component of
    Z^n \\ P. The returned ``infinite`` list holds only the cells of that
    component that lie inside the inflated region.
    """
    pts = sorted({tuple(p) for p in P})
    dim = adj.dimension
    if region is None:
        arr = np.array(pts) if pts else np.zeros((1, dim), dtype=int)
        lo, hi = arr.min(0), arr.max(0)
    else:
        lo, hi = np.array(region[0]), np.array(region[1])
        for p in pts:
            if np.any(np.array(p) < lo) or np.any(np.array(p) > hi):
                raise ValueError(f"{p} lies outside the region")
    if margin < 1:
        raise ValueError("margin must be at least 1")
    lo = lo - margin
    shape = tuple(int(v) for v in hi - lo + 1 + margin)
    free = np.ones(shape, dtype=bool)
    for p in pts:
        free[tuple(np.array(p) - lo)] = False
    structure = ndimage.generate_binary_structure(dim, adj.order)
    labels, count = ndimage.label(free, structure=structure)

    shell = np.zeros(shape, dtype=bool)
    for axis in range(dim):
        idx = [slice(None)] * dim
        idx[axis] = 0
        shell[tuple(idx)] = True
        idx[axis] = -1
        shell[tuple(idx)] = True
    outer = set(np.unique(labels[shell & free]).tolist())

    cells: dict[int, list[Point]] = {}
    for idx in zip(*np.nonzero(free)):
        cells.setdefault(int(labels[idx]), []).append(tuple(int(i + o) for i, o in zip(idx, lo)))
    # one cell of padding always touches the shell, so exactly one outer label exists
    infinite = sorted(itertools.chain.from_iterable(cells[k] for k in outer))
    bounded = sorted((sorted(v) for k, v in cells.items() if k not in outer), key=lambda c: c[0])
    return ComplementComponents(bounded, infinite)


def bfs_distances(X: DigitalImage, adj: Adjacency, source: Point) -> dict[Point, int]:
    _require(X, source)
    dist = {tuple(source): 0}
    queue = deque([tuple(source)])
    while queue:
        p = queue.popleft()
        for q in lattice_neighbors(p, adj):
            if q in X and q not in dist:
                dist[q] = dist[p] + 1
                queue.append(q)
    return dist


def unique_shortest_path(X: DigitalImage, adj: Adjacency, a: Point, b: Point) -> LatticePath | None:
    """The shortest adj-path from a to b inside X, if it is the only one."""
    _require(X, a, b)
    a, b = tuple(a), tuple(b)
    dist = bfs_distances(X, adj, a)
    if b not in dist:
        return None
    # geodesic counts saturate at 2; we only care about "exactly one"
    count = {a: 1}
    for p in sorted(dist, key=dist.get):
        if p == a:
            continue
        preds = [q for q in lattice_neighbors(p, adj) if dist.get(q) == dist[p] - 1]
        count[p] = min(2, sum(count[q] for q in preds))
    if count[b] != 1:
        return None
    path = [b]
    while path[-1] != a:
        p = path[-1]
        path.append(next(q for q in lattice_neighbors(p, adj)
                         if dist.get(q) == dist[p] - 1 and count[q] == 1))
    return LatticePath(tuple(reversed(path)), adj)
