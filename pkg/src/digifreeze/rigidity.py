"""Continuous self-maps and the freezing-set decision procedures.

Deciding whether A freezes (X, adj) is a constraint problem: one variable per
point of X, its domain the candidate images, pinned points fixed, and every
adjacent pair of points forced onto equal-or-adjacent images. A freezing set
is exactly one for which the only solution is the identity.

Domains are bitmasks over the image's canonical point order. Propagation is
arc consistency plus the pulling rule (a point that moves pulls the points
behind it along). The identity is excluded by splitting the search on the
first point, in canonical order, that moves: branch i fixes every earlier
point and forbids x_i from staying put. The branches partition the
non-identity maps, and the first branch with a solution gives the published
witness, so the result does not depend on how many workers run.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .grid import Adjacency, DigitalImage, Point, adjacent_or_equal, lattice_neighbors

DEFAULT_MAX_POINTS = 20


class SearchUndecided(RuntimeError):
    """A node or time budget ran out before the search finished."""


# --- maps --------------------------------------------------------------------

@dataclass(frozen=True)
class SelfMap:
    """A total function X -> X; ``targets[i]`` is the index of f(points[i])."""

    image: DigitalImage
    targets: tuple[int, ...]

    def __post_init__(self):
        n = len(self.image)
        if len(self.targets) != n or any(not 0 <= t < n for t in self.targets):
            raise ValueError("targets must give one in-range image index per point")

    @classmethod
    def identity(cls, X: DigitalImage) -> "SelfMap":
        return cls(X, tuple(range(len(X))))

    @classmethod
    def constant(cls, X: DigitalImage, q: Point) -> "SelfMap":
        return cls(X, (X.index(q),) * len(X))

    @classmethod
    def from_mapping(cls, X: DigitalImage, mapping: dict) -> "SelfMap":
        """Points not mentioned in ``mapping`` are fixed."""
        targets = list(range(len(X)))
        for p, q in mapping.items():
            targets[X.index(p)] = X.index(q)
        return cls(X, tuple(targets))

    def __call__(self, p: Point) -> Point:
        return self.image.points[self.targets[self.image.index(p)]]

    def fixed_points(self) -> tuple[Point, ...]:
        return tuple(p for i, p in enumerate(self.image.points) if self.targets[i] == i)

    def moved(self) -> dict[Point, Point]:
        pts = self.image.points
        return {pts[i]: pts[t] for i, t in enumerate(self.targets) if t != i}

    def is_identity(self) -> bool:
        return all(i == t for i, t in enumerate(self.targets))


def adjacent_pairs(X: DigitalImage, adj: Adjacency) -> Iterator[tuple[int, int]]:
    for i, p in enumerate(X.points):
        for q in lattice_neighbors(p, adj):
            if q in X:
                j = X.index(q)
                if i < j:
                    yield i, j


def is_continuous(f: SelfMap, adj: Adjacency) -> bool:
    pts = f.image.points
    return all(adjacent_or_equal(pts[f.targets[i]], pts[f.targets[j]], adj)
               for i, j in adjacent_pairs(f.image, adj))


def pulling_violations(f: SelfMap, adj: Adjacency) -> list[tuple[Point, Point, int]]:
    """Adjacent pairs (q, q2) and axes i where q moves away from q2 along i
    but q2 does not follow."""
    pts, bad = f.image.points, []
    for i, j in adjacent_pairs(f.image, adj):
        for a, b in ((i, j), (j, i)):
            q, q2, fq, fq2 = pts[a], pts[b], pts[f.targets[a]], pts[f.targets[b]]
            for k in range(len(q)):
                if (fq[k] > q[k] > q2[k] and not fq2[k] > q2[k]) or \
                        (fq[k] < q[k] < q2[k] and not fq2[k] < q2[k]):
                    bad.append((q, q2, k))
    return bad


def shortest_path_violations(f: SelfMap, paths) -> list[tuple[Point, Point]]:
    """Endpoint pairs of unique shortest paths that f fixes at both ends
    without fixing the whole path. ``paths`` maps (x, x2) to a LatticePath."""
    fixed = set(f.fixed_points())
    return [(x, y) for (x, y), path in sorted(paths.items())
            if x in fixed and y in fixed and not fixed.issuperset(path.points)]


def compose(f: SelfMap, g: SelfMap) -> SelfMap:
    """f after g."""
    if f.image != g.image:
        raise ValueError("maps live on different images")
    return SelfMap(f.image, tuple(f.targets[t] for t in g.targets))


# --- precomputed tables --------------------------------------------------------

class _Tables:
    def __init__(self, X: DigitalImage, adj: Adjacency):
        self.image, self.adj = X, adj
        pts = X.points
        n = self.n = len(pts)
        self.full = (1 << n) - 1
        self.nbrs = [[] for _ in range(n)]
        for i, j in adjacent_pairs(X, adj):
            self.nbrs[i].append(j)
            self.nbrs[j].append(i)
        # closed neighborhood of each target, as a mask
        self.closed = [(1 << t) | sum(1 << u for u in self.nbrs[t]) for t in range(n)]
        self._support: dict[int, int] = {}
        # ahead[i][s][v]: points whose coordinate i lies strictly beyond v in direction s
        dim = X.dimension
        self.ahead = []
        for axis in range(dim):
            vals = sorted({p[axis] for p in pts})
            by_sign = {}
            for s in (1, -1):
                by_sign[s] = {v: sum(1 << k for k, p in enumerate(pts) if s * p[axis] > s * v) for v in vals}
            self.ahead.append(by_sign)
        # pulling relations per variable: (other, axis, sign, role)
        self.pulls = [[] for _ in range(n)]
        for i, j in adjacent_pairs(X, adj):
            for axis in range(dim):
                d = pts[i][axis] - pts[j][axis]
                if d == 0:
                    continue
                front, back = (i, j) if d > 0 else (j, i)
                # moving `front` further along +axis pulls `back` along +axis;
                # moving `back` further along -axis pulls `front` along -axis
                for lead, trail, s in ((front, back, 1), (back, front, -1)):
                    self.pulls[lead].append((trail, axis, s, "lead"))
                    self.pulls[trail].append((lead, axis, s, "trail"))

    def support(self, mask: int) -> int:
        hit = self._support.get(mask)
        if hit is not None:
            return hit
        out, m = 0, mask
        while m:
            low = m & -m
            out |= self.closed[low.bit_length() - 1]
            m ^= low
        if len(self._support) < 200_000:
            self._support[mask] = out
        return out


@lru_cache(maxsize=64)
def _tables(X: DigitalImage, adj: Adjacency) -> _Tables:
    return _Tables(X, adj)


@dataclass
class SearchStats:
    nodes: int = 0
    propagations: int = 0
    branches: int = 0
    wall_time: float = 0.0

    def add(self, other: "SearchStats"):
        self.nodes += other.nodes
        self.propagations += other.propagations
        self.branches += other.branches
        self.wall_time += other.wall_time

    def to_dict(self, timings: bool = False) -> dict:
        out = {"nodes": self.nodes, "propagations": self.propagations, "branches": self.branches}
        if timings:
            out["wall_time"] = round(self.wall_time, 6)
        return out


class _Budget:
    def __init__(self, node_cap, time_cap):
        self.node_cap = node_cap
        self.deadline = None if time_cap is None else time.monotonic() + time_cap

    def check(self, stats: SearchStats):
        if self.node_cap is not None and stats.nodes > self.node_cap:
            raise SearchUndecided(f"node cap {self.node_cap} exceeded")
        if self.deadline is not None and stats.nodes % 256 == 0 and time.monotonic() > self.deadline:
            raise SearchUndecided("time cap exceeded")


def _propagate(tab: _Tables, dom: list[int], queue: Iterable[int], pulling: bool, stats: SearchStats) -> bool:
    """Shrink ``dom`` in place to a fixpoint; False on an emptied domain."""
    pending = list(queue)
    queued = set(pending)
    nbrs, ahead = tab.nbrs, tab.ahead
    pts = tab.image.points
    while pending:
        x = pending.pop()
        queued.discard(x)
        sup = tab.support(dom[x])
        for y in nbrs[x]:
            nd = dom[y] & sup
            if nd != dom[y]:
                if not nd:
                    return False
                dom[y] = nd
                stats.propagations += 1
                if y not in queued:
                    queued.add(y)
                    pending.append(y)
        if not pulling:
            continue
        for other, axis, s, role in tab.pulls[x]:
            if role == "lead":
                lead, trail = x, other
            else:
                lead, trail = other, x
            lead_ahead = ahead[axis][s][pts[lead][axis]]
            trail_ahead = ahead[axis][s][pts[trail][axis]]
            if role == "lead" and not dom[lead] & ~lead_ahead:
                target, keep = trail, trail_ahead          # lead surely moves ahead
            elif role == "trail" and not dom[trail] & trail_ahead:
                target, keep = lead, tab.full & ~lead_ahead  # trail surely stays behind
            else:
                continue
            nd = dom[target] & keep
            if nd != dom[target]:
                if not nd:
                    return False
                dom[target] = nd
                stats.propagations += 1
                if target not in queued:
                    queued.add(target)
                    pending.append(target)
    return True


def _values(mask: int, self_index: int) -> list[int]:
    vals = []
    if mask >> self_index & 1:
        vals.append(self_index)
    m = mask
    while m:
        low = m & -m
        v = low.bit_length() - 1
        if v != self_index:
            vals.append(v)
        m ^= low
    return vals


def _solve(tab: _Tables, dom: list[int], pulling: bool, stats: SearchStats, budget: _Budget) -> list[int] | None:
    """Depth-first search over a propagated problem; smallest domain first."""
    best, best_size = -1, None
    for i, m in enumerate(dom):
        if m & (m - 1):
            size = bin(m).count("1")
            if best_size is None or size < best_size:
                best, best_size = i, size
                if size == 2:
                    break
    if best < 0:
        return [m.bit_length() - 1 for m in dom]
    for v in _values(dom[best], best):
        stats.nodes += 1
        budget.check(stats)
        trial = dom.copy()
        trial[best] = 1 << v
        if _propagate(tab, trial, [best], pulling, stats):
            found = _solve(tab, trial, pulling, stats, budget)
            if found is not None:
                return found
    return None


# --- problems ----------------------------------------------------------------

@dataclass
class RigidityProblem:
    """Candidate images for every point of X, with ``pinned`` points fixed."""

    image: DigitalImage
    adjacency: Adjacency
    pinned: tuple[Point, ...]
    domains: list[int]

    @classmethod
    def create(cls, X: DigitalImage, adj: Adjacency, pinned: Iterable[Point] = ()) -> "RigidityProblem":
        pinned = tuple(sorted({tuple(p) for p in pinned}))
        tab = _tables(X, adj)
        dom = [tab.full] * len(X)
        for p in pinned:
            i = X.index(p)
            dom[i] = 1 << i
        return cls(X, adj, pinned, dom)

    def domain(self, p: Point) -> tuple[Point, ...]:
        m = self.domains[self.image.index(p)]
        return tuple(q for k, q in enumerate(self.image.points) if m >> k & 1)

    def is_solved(self) -> bool:
        return all(m and not m & (m - 1) for m in self.domains)


def propagate(problem: RigidityProblem, pulling: bool = True,
              stats: SearchStats | None = None) -> RigidityProblem | None:
    """Arc consistency (plus pulling) to a fixpoint; None when a domain empties."""
    tab = _tables(problem.image, problem.adjacency)
    dom = list(problem.domains)
    if not _propagate(tab, dom, range(len(dom)), pulling, stats or SearchStats()):
        return None
    return RigidityProblem(problem.image, problem.adjacency, problem.pinned, dom)


@dataclass
class SearchOutcome:
    status: str  # "witness", "none" or "undecided"
    witness: SelfMap | None
    stats: SearchStats
    detail: str = ""


def search_witness(X: DigitalImage, adj: Adjacency, pinned: Iterable[Point], pulling: bool = True,
                   node_cap: int | None = None, time_cap: float | None = None) -> SearchOutcome:
    """Look for a continuous non-identity self-map fixing ``pinned``.

    Complete: status ``"none"`` means no such map exists. Budgets that run
    out give status ``"undecided"``.
    """
    pinned = [tuple(p) for p in pinned]
    for p in pinned:
        X.index(p)
    stats = SearchStats()
    start = time.monotonic()
    budget = _Budget(node_cap, time_cap)
    problem = RigidityProblem.create(X, adj, pinned)
    tab = _tables(X, adj)
    prefix = list(problem.domains)
    outcome = SearchOutcome("none", None, stats)
    try:
        if len(X) and _propagate(tab, prefix, range(len(X)), pulling, stats):
            for i in range(len(X)):
                if prefix[i] & ~(1 << i):
                    stats.branches += 1
                    trial = prefix.copy()
                    trial[i] &= ~(1 << i)
                    if _propagate(tab, trial, [i], pulling, stats):
                        found = _solve(tab, trial, pulling, stats, budget)
                        if found is not None:
                            outcome = SearchOutcome("witness", SelfMap(X, tuple(found)), stats)
                            break
                # later branches keep x_i fixed; the identity keeps this consistent
                prefix[i] = 1 << i
                _propagate(tab, prefix, [i], pulling, stats)
    except SearchUndecided as exc:
        outcome = SearchOutcome("undecided", None, stats, str(exc))
    stats.wall_time = time.monotonic() - start
    if outcome.witness is not None:
        _check_witness(outcome.witness, adj, pinned)
    return outcome


def _check_witness(f: SelfMap, adj: Adjacency, pinned):
    fixed = set(f.fixed_points())
    if not is_continuous(f, adj) or f.is_identity() or not set(pinned) <= fixed:
        raise AssertionError("search produced an invalid witness")


def find_witness(X: DigitalImage, adj: Adjacency, A: Iterable[Point], **kwargs) -> SelfMap | None:
    """A non-identity continuous self-map fixing A, or None if A freezes X.

    Raises :class:`SearchUndecided` when a budget runs out.
    """
    out = search_witness(X, adj, A, **kwargs)
    if out.status == "undecided":
        raise SearchUndecided(out.detail)
    return out.witness


# --- reports -----------------------------------------------------------------

def _points(ps) -> list[list[int]]:
    return [list(p) for p in ps]


def _map_dict(f: SelfMap | None):
    if f is None:
        return None
    return [[list(p), list(q)] for p, q in sorted(f.moved().items())]


@dataclass
class FreezingReport:
    image: DigitalImage
    adjacency: Adjacency
    candidate: tuple[Point, ...]
    status: str  # "freezing", "not-freezing" or "undecided"
    witness: SelfMap | None = None
    minimality: dict | None = None  # point -> witness map, None (removable) or "undecided"
    minimal_status: str | None = None  # "minimal", "not-minimal", "undecided" or None if not asked
    removable: Point | None = None
    stats: SearchStats = field(default_factory=SearchStats)

    @property
    def is_freezing(self) -> bool | None:
        return None if self.status == "undecided" else self.status == "freezing"

    @property
    def is_minimal(self) -> bool | None:
        if self.minimal_status in (None, "undecided"):
            return None
        return self.minimal_status == "minimal"

    @property
    def undecided(self) -> bool:
        return self.status == "undecided" or self.minimal_status == "undecided"

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "adjacency": self.adjacency.name,
            "candidate": _points(self.candidate),
            "size": len(self.candidate),
            "status": self.status,
            "witness": _map_dict(self.witness),
        }
        if self.minimal_status is not None:
            out["minimal_status"] = self.minimal_status
            out["removable"] = list(self.removable) if self.removable else None
            out["minimality"] = [
                [list(p), w if isinstance(w, str) else _map_dict(w)] for p, w in sorted(self.minimality.items())
            ]
        out["stats"] = self.stats.to_dict(timings)
        return out


def _run_search(args):
    X, adj, pinned, kwargs = args
    return search_witness(X, adj, pinned, **kwargs)


def _run_all(jobs, workers: int):
    if workers <= 1 or len(jobs) <= 1:
        return [_run_search(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_search, jobs))


def _kw(pulling, node_cap, time_cap):
    return {"pulling": pulling, "node_cap": node_cap, "time_cap": time_cap}


def is_freezing_set(X: DigitalImage, adj: Adjacency, A: Iterable[Point], pulling: bool = True,
                    node_cap: int | None = None, time_cap: float | None = None) -> FreezingReport:
    A = tuple(sorted({tuple(p) for p in A}))
    out = search_witness(X, adj, A, **_kw(pulling, node_cap, time_cap))
    status = {"witness": "not-freezing", "none": "freezing", "undecided": "undecided"}[out.status]
    return FreezingReport(X, adj, A, status, out.witness, stats=out.stats)


def is_minimal_freezing_set(X: DigitalImage, adj: Adjacency, A: Iterable[Point], pulling: bool = True,
                            node_cap: int | None = None, time_cap: float | None = None,
                            workers: int = 1) -> FreezingReport:
    """Freezing verdict for A plus, per point p of A, a witness that A minus p does not freeze.

    The per-point searches are independent and may run on ``workers``
    processes; results are merged in canonical order.
    """
    A = tuple(sorted({tuple(p) for p in A}))
    kw = _kw(pulling, node_cap, time_cap)
    jobs = [(X, adj, A, kw)] + [(X, adj, tuple(q for q in A if q != p), kw) for p in A]
    outs = _run_all(jobs, workers)
    head = outs[0]
    stats = SearchStats()
    for o in outs:
        stats.add(o.stats)
    status = {"witness": "not-freezing", "none": "freezing", "undecided": "undecided"}[head.status]
    report = FreezingReport(X, adj, A, status, head.witness, stats=stats)
    if status != "freezing":
        report.minimal_status = "not-minimal" if status == "not-freezing" else "undecided"
        report.minimality = {}
        return report
    per, removable, undecided = {}, None, False
    for p, o in zip(A, outs[1:]):
        if o.status == "witness":
            per[p] = o.witness
        elif o.status == "none":
            per[p] = None
            removable = removable or p
        else:
            per[p] = "undecided"
            undecided = True
    report.minimality = per
    report.removable = removable
    if removable is not None:
        report.minimal_status = "not-minimal"
    elif undecided:
        report.minimal_status = "undecided"
    else:
        report.minimal_status = "minimal"
    return report


def minimum_freezing_sets(X: DigitalImage, adj: Adjacency, cap: int | None = None,
                          max_points: int = DEFAULT_MAX_POINTS, force: bool = False,
                          pulling: bool = True) -> list[tuple[Point, ...]]:
    """Every freezing set of least cardinality (at most ``cap``), found by trying
    subsets in increasing size. Refuses images above ``max_points`` unless forced."""
    if len(X) > max_points and not force:
        raise ValueError(f"{len(X)} points exceeds {max_points}; pass force=True to search anyway")
    top = len(X) if cap is None else min(cap, len(X))
    for k in range(top + 1):
        found = [A for A in itertools.combinations(X.points, k)
                 if search_witness(X, adj, A, pulling=pulling).status == "none"]
        if found:
            return found
    return []


# --- independent enumeration ---------------------------------------------------

def enumerate_continuous_maps(X: DigitalImage, adj: Adjacency,
                              pinned: Iterable[Point] = ()) -> Iterator[SelfMap]:
    """Every continuous self-map fixing ``pinned``, by plain backtracking.

    Points are assigned in breadth-first order and each choice is only checked
    against already-assigned neighbors; no propagation. Meant as an oracle for
    small images.
    """
    pts = X.points
    n = len(pts)
    if n == 0:
        yield SelfMap(X, ())
        return
    order, seen = [], set()
    for root in range(n):
        if root in seen:
            continue
        seen.add(root)
        queue = [root]
        while queue:
            i = queue.pop(0)
            order.append(i)
            for q in lattice_neighbors(pts[i], adj):
                if q in X and X.index(q) not in seen:
                    seen.add(X.index(q))
                    queue.append(X.index(q))
    fixed = {X.index(p) for p in pinned}
    nb = [[X.index(q) for q in lattice_neighbors(p, adj) if q in X] for p in pts]
    targets = [None] * n

    def rec(k):
        if k == n:
            yield SelfMap(X, tuple(targets))
            return
        i = order[k]
        choices = [i] if i in fixed else range(n)
        for t in choices:
            if all(targets[j] is None or adjacent_or_equal(pts[t], pts[targets[j]], adj) for j in nb[i]):
                targets[i] = t
                yield from rec(k + 1)
                targets[i] = None

    yield from rec(0)


def brute_force_witness_exists(X: DigitalImage, adj: Adjacency, A: Iterable[Point]) -> bool:
    return any(not f.is_identity() for f in enumerate_continuous_maps(X, adj, A))

