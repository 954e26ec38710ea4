"""Boundary, closed curves, digital disks and their bounding curves in Z^2.

A disk is validated exactly one way: the curve is checked under c2, its
complement under c1, and the disk must equal the curve plus the single
bounded complementary component. Every curve this module produces, traced or
searched, goes through that check before it is returned.

Angles are integer degrees, always multiples of 45.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .grid import (C1, C2, Adjacency, DigitalImage, Point, are_adjacent,
                   connected_components, is_connected, lattice_neighbors)

# Unit steps counterclockwise from east; index * 45 is the heading in degrees.
DIRECTIONS: tuple[Point, ...] = ((1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1))
_DIR_INDEX = {d: i for i, d in enumerate(DIRECTIONS)}

HORIZONTAL, VERTICAL, SLANT_UP, SLANT_DOWN = "horizontal", "vertical", "slant+", "slant-"

EXHAUSTIVE_LIMIT = 36


def boundary(X: DigitalImage | Iterable[Point]) -> tuple[Point, ...]:
    """Points of X with a c1-neighbor outside X."""
    pts = set(map(tuple, X))
    if not pts:
        return ()
    adj = Adjacency(len(next(iter(pts))), 1)
    return tuple(sorted(p for p in pts if any(q not in pts for q in lattice_neighbors(p, adj))))


def interior(X: DigitalImage | Iterable[Point]) -> tuple[Point, ...]:
    pts = set(map(tuple, X))
    bd = set(boundary(pts))
    return tuple(sorted(pts - bd))


class CurveError(ValueError):
    """A sequence that is not a closed curve; ``index`` locates the defect."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class NotADiskError(ValueError):
    """Raised when a curve does not bound the given set as a disk.

    ``clause`` is one of ``"curve"``, ``"containment"``, ``"no-bounded"``,
    ``"several-bounded"`` or ``"mismatch"``; ``bounded`` lists the bounded
    complementary components that were found.
    """

    def __init__(self, message: str, clause: str, bounded=()):
        super().__init__(message)
        self.clause = clause
        self.bounded = [list(c) for c in bounded]


@dataclass(frozen=True)
class CurveCycle:
    """A closed curve stored once around, without repeating the first point."""

    points: tuple[Point, ...]
    adjacency: Adjacency
    simple: bool

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def steps(self) -> list[Point]:
        pts, k = self.points, len(self.points)
        return [tuple(b - a for a, b in zip(pts[i], pts[(i + 1) % k])) for i in range(k)]


def _is_simple(points: Sequence[Point], adj: Adjacency) -> bool:
    k = len(points)
    for i in range(k):
        for j in range(i + 1, k):
            if are_adjacent(points[i], points[j], adj) and (j - i) % k not in (1, k - 1):
                return False
    return True


def is_closed_curve(sequence: Sequence[Sequence[int]], adj: Adjacency = C2, jct: bool = False) -> CurveCycle:
    """Validate a cyclic sequence as an adj-closed curve.

    The closing repetition of the first point is optional. With ``jct=True``
    the curve must also be simple and meet the minimum sizes under which the
    digital Jordan curve theorem holds (8 points for c1, 4 for c2).
    Raises :class:`CurveError` otherwise.
    """
    pts = [tuple(int(c) for c in p) for p in sequence]
    if len(pts) > 1 and pts[0] == pts[-1]:
        pts.pop()
    if not pts:
        raise CurveError("empty curve")
    seen = {}
    for i, p in enumerate(pts):
        if p in seen:
            raise CurveError(f"point {p} repeats at indices {seen[p]} and {i}", i)
        seen[p] = i
    k = len(pts)
    if k > 1:
        for i in range(k):
            p, q = pts[i], pts[(i + 1) % k]
            if not are_adjacent(p, q, adj):
                raise CurveError(f"{p} and {q} (index {i}) are not {adj}-adjacent", i)
    curve = CurveCycle(tuple(pts), adj, _is_simple(pts, adj))
    if jct:
        need = 8 if adj.order == 1 else 4
        if k < need:
            raise CurveError(f"a {adj}-curve needs at least {need} points, got {k}")
        if not curve.simple:
            raise CurveError("curve is not simple")
    return curve


def jordan_components(curve: CurveCycle):
    """Complementary components of a curve under the dual adjacency."""
    dual = C2 if curve.adjacency.order == 1 else C1
    return connected_components(curve.points, dual)


def signed_area2(points: Sequence[Point]) -> int:
    """Twice the signed shoelace area of the closed polygon through ``points``."""
    k = len(points)
    return sum(points[i][0] * points[(i + 1) % k][1] - points[(i + 1) % k][0] * points[i][1]
               for i in range(k))


def _normalize(points: Sequence[Point]) -> tuple[Point, ...]:
    """Rotate to start at the least point and orient counterclockwise."""
    pts = list(points)
    if signed_area2(pts) < 0:
        pts.reverse()
    i = pts.index(min(pts))
    return tuple(pts[i:] + pts[:i])


@dataclass(frozen=True)
class DiskDecomposition:
    disk: DigitalImage
    curve: CurveCycle
    curve_interior: tuple[Point, ...]
    method: str = "given"
    heuristic: bool = False

    @property
    def size(self) -> int:
        return len(self.curve)


def _check_disk(D: frozenset, pts: Sequence[Point]):
    """Return (reason, clause, bounded, interior); reason is None on success."""
    try:
        is_closed_curve(pts, C2)
    except CurveError as exc:
        return f"not a c2-closed curve: {exc}", "curve", [], None
    outside = [p for p in pts if p not in D]
    if outside:
        return f"curve points {outside} are not in the set", "containment", [], None
    bounded = connected_components(pts, C1).bounded
    if not bounded:
        return "complement of the curve has no bounded c1-component", "no-bounded", bounded, None
    if len(bounded) > 1:
        return (f"complement of the curve has {len(bounded)} bounded c1-components",
                "several-bounded", bounded, None)
    inner = bounded[0]
    if set(pts) | set(inner) != D:
        return "curve plus its interior does not equal the set", "mismatch", bounded, None
    return None, None, bounded, inner


def validate_bounding_curve(D: DigitalImage | Iterable[Point], curve: CurveCycle | Sequence[Point],
                            method: str = "given") -> DiskDecomposition:
    """Check that ``curve`` bounds ``D`` as a disk; raise :class:`NotADiskError` if not."""
    disk = D if isinstance(D, DigitalImage) else DigitalImage.from_points(D, 2)
    pts = list(curve.points if isinstance(curve, CurveCycle) else curve)
    if len(pts) > 1 and tuple(pts[0]) == tuple(pts[-1]):
        pts.pop()
    pts = [tuple(p) for p in pts]
    reason, clause, bounded, inner = _check_disk(disk.as_set(), pts)
    if reason is not None:
        raise NotADiskError(reason, clause, bounded)
    cyc = is_closed_curve(_normalize(pts), C2)
    return DiskDecomposition(disk, cyc, tuple(inner), method)


def _try_decompose(disk: DigitalImage, pts, method: str, heuristic=False) -> DiskDecomposition | None:
    reason, _, _, inner = _check_disk(disk.as_set(), pts)
    if reason is not None:
        return None
    return DiskDecomposition(disk, is_closed_curve(_normalize(pts), C2), tuple(inner), method, heuristic)


# --- contour tracing ---------------------------------------------------------

_C1_HEADINGS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def trace_c1_contour(D: DigitalImage | Iterable[Point]) -> list[Point]:
    """Outer contour of D using c1 steps, exterior kept on the right.

    Starts at the least point; may revisit points where D is thin, in which
    case the result is not a closed curve and validation will say so.
    """
    pts = set(map(tuple, D))
    if not pts:
        return []
    start = min(pts)
    path, p, h = [start], start, 0
    first = None
    for _ in range(4 * len(pts) + 8):
        for turn in (-1, 0, 1, 2):
            nh = (h + turn) % 4
            q = (p[0] + _C1_HEADINGS[nh][0], p[1] + _C1_HEADINGS[nh][1])
            if q in pts:
                break
        else:
            return path
        if first is None:
            first = q
        elif p == start and q == first:
            path.pop()
            return path
        path.append(q)
        p, h = q, nh
    return path


# neighbor offsets in clockwise order, starting west
_CW = ((-1, 0), (-1, 1), (0, 1), (1, 1), (1, 0), (1, -1), (0, -1), (-1, -1))


def trace_moore_contour(D: DigitalImage | Iterable[Point]) -> list[Point]:
    """Outer contour of D by Moore-neighbor tracing (c2 steps)."""
    pts = set(map(tuple, D))
    if not pts:
        return []
    start = min(pts)
    path = [start]
    p, back = start, (start[0] - 1, start[1])
    first = None
    for _ in range(8 * len(pts) + 8):
        k = _CW.index((back[0] - p[0], back[1] - p[1]))
        prev_bg, nxt = back, None
        for step in range(1, 9):
            off = _CW[(k + step) % 8]
            cand = (p[0] + off[0], p[1] + off[1])
            if cand in pts:
                nxt = cand
                break
            prev_bg = cand
        if nxt is None:
            return path
        if first is None:
            first = nxt
        elif p == start and nxt == first:
            path.pop()
            return path
        path.append(nxt)
        p, back = nxt, prev_bg
    return path


# --- exhaustive curve enumeration ---------------------------------------------

def curve_pool(D: DigitalImage | Iterable[Point]) -> tuple[Point, ...]:
    """Points that may lie on a searched bounding curve: Bd(D) plus every point
    of D that is c2-adjacent to the complement."""
    pts = set(map(tuple, D))
    return tuple(sorted(p for p in pts if any(q not in pts for q in lattice_neighbors(p, C2))))


def enumerate_cycles(pool: Sequence[Point], required: Iterable[Point],
                     max_len: int | None = None,
                     turns: Iterable[Point] | None = None) -> Iterator[tuple[Point, ...]]:
    """All c2-cycles (length >= 3) inside ``pool`` that contain every required point.

    Each cycle is produced once, starting at the least required point, in
    depth-first canonical order. With ``turns`` given, the path may change
    direction only at those points (the closing corners are not checked).
    """
    turn_set = set(turns) if turns is not None else None
    pool_set = set(pool)
    req = set(required)
    if not req or not req <= pool_set:
        return
    nbrs = {p: sorted(q for q in lattice_neighbors(p, C2) if q in pool_set) for p in pool_set}
    start = min(req)
    limit = max_len if max_len is not None else len(pool_set)
    path = [start]
    on_path = {start}
    missing = [len(req) - 1]

    def feasible(u):
        # every unvisited required point still needs two usable neighbors
        for r in req:
            if r in on_path:
                continue
            free = 0
            for q in nbrs[r]:
                if q not in on_path or q == start or q == u:
                    free += 1
                    if free >= 2:
                        break
            if free < 2:
                return False
        return True

    def extend(u):
        if missing[0] == 0 and len(path) >= 3 and start in nbrs[u] and path[1] < path[-1]:
            yield tuple(path)
        if len(path) >= limit:
            return
        for v in nbrs[u]:
            if v in on_path:
                continue
            if turn_set is not None and len(path) >= 2 and u not in turn_set \
                    and (u[0] - path[-2][0], u[1] - path[-2][1]) != (v[0] - u[0], v[1] - u[1]):
                continue
            path.append(v)
            on_path.add(v)
            if v in req:
                missing[0] -= 1
            if feasible(v):
                yield from extend(v)
            if v in req:
                missing[0] += 1
            on_path.discard(v)
            path.pop()

    yield from extend(start)


def _exhaustive(disk: DigitalImage, max_len=None) -> Iterator[DiskDecomposition]:
    bd = boundary(disk)
    for cyc in enumerate_cycles(curve_pool(disk), bd, max_len):
        dec = _try_decompose(disk, cyc, "exhaustive")
        if dec is not None:
            yield dec


def _shortcut(dec: DiskDecomposition) -> DiskDecomposition:
    """Drop curve points whose neighbors along the curve are c2-adjacent, while
    the result still bounds the disk."""
    pts = list(dec.curve.points)
    changed = True
    while changed:
        changed = False
        for i in range(len(pts)):
            k = len(pts)
            if k <= 4:
                break
            if are_adjacent(pts[i - 1], pts[(i + 1) % k], C2):
                trial = pts[:i] + pts[i + 1:]
                if _check_disk(dec.disk.as_set(), trial)[0] is None:
                    pts = trial
                    changed = True
                    break
    out = _try_decompose(dec.disk, pts, "shortcut", heuristic=True)
    return out if out is not None else dec


def find_bounding_curves(D: DigitalImage | Iterable[Point], mode: str = "canonical",
                         exhaustive_limit: int = EXHAUSTIVE_LIMIT) -> list[DiskDecomposition]:
    """Bounding curves of D; an empty list means D is not a disk.

    ``canonical`` traces the c1 outer contour, falling back to the Moore
    (c2) contour and then to the first curve of the exhaustive search.
    ``minimal`` returns one bounding curve of least cardinality; it is exact
    up to ``exhaustive_limit`` points and a corner-shortcutting heuristic
    above that (``heuristic=True`` on the result). ``all`` enumerates every
    bounding curve drawn from :func:`curve_pool`, small disks only.
    """
    disk = D if isinstance(D, DigitalImage) else DigitalImage.from_points(D, 2)
    if mode not in ("canonical", "minimal", "all"):
        raise ValueError(f"unknown mode {mode!r}")
    if disk.dimension != 2:
        raise ValueError("bounding curves are defined in Z^2 only")
    small = len(disk) <= exhaustive_limit
    if mode == "all" and not small:
        raise ValueError(f"{len(disk)} points exceeds the exhaustive limit {exhaustive_limit}; "
                         "use mode='minimal' or 'canonical'")
    if len(disk) < 5 or not is_connected(disk, C1):
        return []

    if mode == "all":
        return sorted(_exhaustive(disk), key=lambda d: (d.size, d.curve.points))

    if mode == "minimal" and small:
        found = list(_exhaustive(disk))
        if not found:
            return []
        best = min(found, key=lambda d: (d.size, d.curve.points))
        return [DiskDecomposition(disk, best.curve, best.curve_interior, "minimal")]

    canonical = None
    for method, tracer in (("c1-trace", trace_c1_contour), ("moore-trace", trace_moore_contour)):
        canonical = _try_decompose(disk, tracer(disk), method)
        if canonical is not None:
            break
    if canonical is None and small:
        canonical = next(_exhaustive(disk), None)
    if canonical is None:
        return []
    if mode == "canonical":
        return [canonical]
    return [_shortcut(canonical)]


# --- segments and angles ------------------------------------------------------

def orientation_of(step: Point) -> str:
    dx, dy = step
    if dy == 0:
        return HORIZONTAL
    if dx == 0:
        return VERTICAL
    return SLANT_UP if dx == dy else SLANT_DOWN


@dataclass(frozen=True)
class Segment:
    points: tuple[Point, ...]
    orientation: str

    @property
    def endpoints(self) -> tuple[Point, Point]:
        return self.points[0], self.points[-1]

    @property
    def slanted(self) -> bool:
        return self.orientation in (SLANT_UP, SLANT_DOWN)

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class SegmentDecomposition:
    segments: tuple[Segment, ...]
    vertices: tuple[Point, ...]
    angles: tuple[tuple[Point, int], ...]

    def angle_at(self, p: Point) -> int:
        return dict(self.angles)[tuple(p)]


def _vertex_indices(curve: CurveCycle) -> list[int]:
    steps = curve.steps()
    k = len(steps)
    return [i for i in range(k) if steps[i - 1] != steps[i]]


def curve_segments(curve: CurveCycle) -> list[Segment]:
    """Maximal straight runs of a closed curve, in curve order."""
    pts, k = curve.points, len(curve.points)
    steps = curve.steps()
    idx = _vertex_indices(curve)
    segs = []
    for j, a in enumerate(idx):
        b = idx[(j + 1) % len(idx)]
        run = [pts[(a + t) % k] for t in range(((b - a) % k or k) + 1)]
        segs.append(Segment(tuple(run), orientation_of(steps[a])))
    return segs


def maximal_segments(dec: DiskDecomposition) -> SegmentDecomposition:
    segs = curve_segments(dec.curve)
    vertices = tuple(seg.points[0] for seg in segs)
    angles = tuple((v, interior_angle(dec, v)) for v in vertices)
    return SegmentDecomposition(tuple(segs), vertices, angles)


def _sweep(start: int, stop: int) -> list[int]:
    """Direction indices strictly between ``start`` and ``stop``, turning counterclockwise."""
    return [(start + t) % 8 for t in range(1, (stop - start) % 8)]


def _angle_sides(dec: DiskDecomposition, p: Point):
    pts, k = dec.curve.points, len(dec.curve.points)
    try:
        i = pts.index(tuple(p))
    except ValueError:
        raise ValueError(f"{p} is not on the curve") from None
    if i not in _vertex_indices(dec.curve):
        raise ValueError(f"{p} is not a vertex of the curve")
    prev, nxt = pts[i - 1], pts[(i + 1) % k]
    back = _DIR_INDEX[(prev[0] - p[0], prev[1] - p[1])]
    out = _DIR_INDEX[(nxt[0] - p[0], nxt[1] - p[1])]
    return i, back, out


def _side_points(dec: DiskDecomposition, i: int) -> set:
    """Points of the two maximal segments meeting at curve index i."""
    pts, k = dec.curve.points, len(dec.curve.points)
    steps = dec.curve.steps()
    side = {pts[i]}
    j = i
    while True:
        j = (j + 1) % k
        side.add(pts[j])
        if steps[j] != steps[i] or j == i:
            break
    j = i
    while True:
        j = (j - 1) % k
        side.add(pts[j])
        if steps[(j - 1) % k] != steps[(i - 1) % k] or j == i:
            break
    return side


def interior_angle(dec: DiskDecomposition, p: Point) -> int:
    """Interior angle of the disk at curve vertex ``p``, in degrees.

    The angle is swept from one side to the other through a point of the disk
    that is c2-adjacent to p and on neither side. When no such point exists the
    angle is the acute one (45). If points lie on both sweeps, the curve's
    counterclockwise orientation picks the interior one.
    """
    i, back, out = _angle_sides(dec, p)
    p = tuple(p)
    disk = dec.disk
    sides = _side_points(dec, i)

    def witnessed(dirs):
        return any((p[0] + DIRECTIONS[d][0], p[1] + DIRECTIONS[d][1]) in disk
                   and (p[0] + DIRECTIONS[d][0], p[1] + DIRECTIONS[d][1]) not in sides
                   for d in dirs)

    # stored curves run counterclockwise, so the interior lies from `out` round to `back`
    inner, outer = _sweep(out, back), _sweep(back, out)
    inner_deg, outer_deg = ((back - out) % 8) * 45, ((out - back) % 8) * 45
    hit_in, hit_out = witnessed(inner), witnessed(outer)
    if hit_in and not hit_out:
        return inner_deg
    if hit_out and not hit_in:
        return outer_deg
    if not hit_in and not hit_out:
        return min(inner_deg, outer_deg)
    return inner_deg


def interior_side_directions(dec: DiskDecomposition, p: Point) -> list[Point]:
    """Unit steps from vertex ``p`` pointing strictly inside its interior angle."""
    i, back, out = _angle_sides(dec, p)
    deg = interior_angle(dec, p)
    if ((back - out) % 8) * 45 == deg:
        dirs = _sweep(out, back)
    else:
        dirs = _sweep(back, out)
    return [DIRECTIONS[d] for d in dirs]


def left_normal(step: Point) -> Point:
    """The step rotated by +90 degrees; for a counterclockwise curve it points inward."""
    return (-step[1], step[0])
