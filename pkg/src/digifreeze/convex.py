"""Convex hulls of lattice sets, digital convexity and thickness of disks.

Everything here is exact integer arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .grid import C2, DigitalImage, Point, is_connected
from .planar import (DiskDecomposition, SegmentDecomposition, _try_decompose, boundary, curve_pool,
                     enumerate_cycles, find_bounding_curves, interior_side_directions, left_normal,
                     maximal_segments)


def cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


@dataclass(frozen=True)
class HullPolygon:
    vertices: tuple[Point, ...]
    degenerate_kind: str  # "point", "segment" or "polygon"


def convex_hull(Y: Iterable[Point]) -> HullPolygon:
    """Vertices of hull(Y), counterclockwise from the least point (monotone chain)."""
    pts = sorted({tuple(p) for p in Y})
    if not pts:
        raise ValueError("convex hull of an empty set")
    if any(len(p) != 2 for p in pts):
        raise ValueError("convex hulls are computed in the plane only")
    if len(pts) == 1:
        return HullPolygon((pts[0],), "point")

    def chain(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower, upper = chain(pts), chain(reversed(pts))
    hull = lower[:-1] + upper[:-1]
    if len(hull) == 2:
        return HullPolygon(tuple(hull), "segment")
    return HullPolygon(tuple(hull), "polygon")


def is_digital_segment(Y: Iterable[Point]) -> bool:
    """A c1- or c2-connected collinear set of at least two points."""
    pts = sorted({tuple(p) for p in Y})
    if len(pts) < 2:
        return False
    if any(cross(pts[0], pts[1], p) != 0 for p in pts[2:]):
        return False
    return is_connected(pts, C2)


@dataclass
class ConvexityCertificate:
    convex: bool
    clause: str
    curve: DiskDecomposition | None = None
    hull: HullPolygon | None = None
    reason: str = ""

    def __bool__(self):
        return self.convex


def curve_matches_hull(dec: DiskDecomposition, hull: HullPolygon | None = None) -> bool:
    """Do the segment endpoints of the curve coincide with the hull vertices?"""
    hull = hull or convex_hull(dec.disk)
    return set(maximal_segments(dec).vertices) == set(hull.vertices)


def candidate_curves(D: DigitalImage, exhaustive_limit: int = 36) -> list[DiskDecomposition]:
    """Canonical, minimal and (for small D) all bounding curves, without repeats."""
    seen, out = set(), []
    modes = ["canonical", "minimal"] + (["all"] if len(D) <= exhaustive_limit else [])
    for mode in modes:
        for dec in find_bounding_curves(D, mode, exhaustive_limit):
            if dec.curve.points not in seen:
                seen.add(dec.curve.points)
                out.append(dec)
    return out


def hull_curves(D: DigitalImage, hull: HullPolygon | None = None) -> Iterator[DiskDecomposition]:
    """Bounding curves of D whose segment endpoints are the hull vertices.

    Such a curve turns only at hull vertices, which prunes the cycle search
    enough to run it on any disk.
    """
    hull = hull or convex_hull(D)
    for cyc in enumerate_cycles(curve_pool(D), boundary(D), turns=hull.vertices):
        dec = _try_decompose(D, cyc, "hull")
        if dec is not None and curve_matches_hull(dec, hull):
            yield dec


def is_digitally_convex(Y: DigitalImage | Iterable[Point]) -> ConvexityCertificate:
    """Point, digital segment, or disk with a bounding curve whose segment
    endpoints are exactly the vertices of the real convex hull."""
    img = Y if isinstance(Y, DigitalImage) else DigitalImage.from_points(Y, 2)
    if len(img) == 0:
        return ConvexityCertificate(False, "empty", reason="empty set")
    if len(img) == 1:
        return ConvexityCertificate(True, "point", hull=convex_hull(img))
    hull = convex_hull(img)
    if is_digital_segment(img):
        return ConvexityCertificate(True, "segment", hull=hull)
    if not find_bounding_curves(img, "canonical"):
        return ConvexityCertificate(False, "not-a-disk", hull=hull, reason="no bounding curve found")
    dec = next(hull_curves(img, hull), None)
    if dec is not None:
        return ConvexityCertificate(True, "disk", dec, hull)
    return ConvexityCertificate(False, "hull-mismatch", hull=hull,
                                reason="no bounding curve has its segment endpoints at the hull vertices")


@dataclass
class ThicknessReport:
    thick: bool
    violations: list[tuple[Point, str]] = field(default_factory=list)

    def __bool__(self):
        return self.thick


def _add(p, d):
    return (p[0] + d[0], p[1] + d[1])


def is_thick(dec: DiskDecomposition, segments: SegmentDecomposition | None = None) -> ThicknessReport:
    """Thickness of the disk relative to the decomposition's bounding curve.

    ``slant``: each non-endpoint p of a slanted segment needs the diagonal
    neighbor of p on the interior side of the segment in the disk.
    ``angle135``: at each 135-degree vertex, the diagonal and the axis step
    strictly inside the angle must both land in the disk.
    """
    disk = dec.disk
    segments = segments or maximal_segments(dec)
    bad = []
    for seg in segments.segments:
        if not seg.slanted:
            continue
        step = (seg.points[1][0] - seg.points[0][0], seg.points[1][1] - seg.points[0][1])
        inward = left_normal(step)
        for p in seg.points[1:-1]:
            c = _add(p, inward)
            if c not in disk:
                bad.append((p, "slant"))
    for v, deg in segments.angles:
        if deg != 135:
            continue
        dirs = interior_side_directions(dec, v)
        diag = [d for d in dirs if d[0] and d[1]]
        axis = [d for d in dirs if not (d[0] and d[1])]
        b_ok = any(_add(v, d) in disk for d in diag)
        b2_ok = any(_add(v, d) in disk for d in axis)
        if not (b_ok and b2_ok):
            bad.append((v, "angle135"))
    bad = sorted(set(bad))
    return ThicknessReport(not bad, bad)


@dataclass
class ThicknessReadings:
    """Thickness under the two readings of which bounding curve is meant.

    ``existential``: some bounding curve satisfies both clauses.
    ``universal``: every searched bounding curve does.
    """
    existential: bool
    universal: bool
    witness: DiskDecomposition | None
    per_curve: list[tuple[DiskDecomposition, ThicknessReport]]

    @property
    def disagree(self) -> bool:
        return self.existential != self.universal


def thickness_readings(D: DigitalImage | Iterable[Point], curves=None,
                       exhaustive_limit: int = 36) -> ThicknessReadings:
    img = D if isinstance(D, DigitalImage) else DigitalImage.from_points(D, 2)
    curves = curves if curves is not None else candidate_curves(img, exhaustive_limit)
    per = [(dec, is_thick(dec)) for dec in curves]
    witness = next((dec for dec, rep in per if rep.thick), None)
    return ThicknessReadings(witness is not None, bool(per) and all(rep.thick for _, rep in per), witness, per)


def runs_are_contiguous(Y: Iterable[Point]) -> bool:
    """Every row and column of Y is a single contiguous run."""
    pts = {tuple(p) for p in Y}
    for axis in (0, 1):
        lines: dict[int, list[int]] = {}
        for p in pts:
            lines.setdefault(p[axis], []).append(p[1 - axis])
        for vals in lines.values():
            if max(vals) - min(vals) + 1 != len(vals):
                return False
    return True

