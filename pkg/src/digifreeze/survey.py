"""Bounded search for convex disks that are not thick.

A digitally convex disk is the set of lattice points of a polygon whose
edges run horizontally, vertically or at 45 degrees, so each of its rows and
columns is one contiguous run. The search therefore walks only the
row-and-column-convex, 4-connected sets that exactly fill a w x h box, keeps
one representative per symmetry class, and tests each for being a disk,
convexity and both readings of thickness: some bounding curve passes the
thickness clauses (existential) or every searched one does (universal).
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .convex import is_digitally_convex, thickness_readings
from .grid import DigitalImage, Point
from .planar import find_bounding_curves

MAX_SIDE = 6

_SYMMETRIES = (
    lambda x, y: (x, y), lambda x, y: (-x, y), lambda x, y: (x, -y), lambda x, y: (-x, -y),
    lambda x, y: (y, x), lambda x, y: (-y, x), lambda x, y: (y, -x), lambda x, y: (-y, -x),
)


def _normalize(pts):
    x0 = min(p[0] for p in pts)
    y0 = min(p[1] for p in pts)
    return tuple(sorted((x - x0, y - y0) for x, y in pts))


def canonical_form(pts, max_w: int | None = None, max_h: int | None = None) -> tuple[Point, ...]:
    """Least image of ``pts`` under the eight symmetries of the square, after
    translating to the origin; only images fitting a max_w x max_h box count."""
    best = None
    for sym in _SYMMETRIES:
        img = _normalize([sym(*p) for p in pts])
        if max_w is not None and max(p[0] for p in img) >= max_w:
            continue
        if max_h is not None and max(p[1] for p in img) >= max_h:
            continue
        if best is None or img < best:
            best = img
    return best


def hv_convex_sets(w: int, h: int):
    """4-connected sets with every row and column a single run, filling [0,w) x [0,h)."""
    cols = [0] * w  # 0 unused, 1 open in the previous row, 2 closed

    def rec(y, prev, rows):
        if y == h:
            lo = min(a for a, _ in rows)
            hi = max(b for _, b in rows)
            if lo == 0 and hi == w - 1:
                yield [(x, yy) for yy, (a, b) in enumerate(rows) for x in range(a, b + 1)]
            return
        for a in range(w):
            for b in range(a, w):
                if prev is not None and (b < prev[0] or a > prev[1]):
                    continue
                if any(cols[x] == 2 for x in range(a, b + 1)):
                    continue
                saved = cols[:]
                for x in range(w):
                    if a <= x <= b:
                        cols[x] = 1
                    elif cols[x] == 1:
                        cols[x] = 2
                yield from rec(y + 1, (a, b), rows + [(a, b)])
                cols[:] = saved

    yield from rec(0, None, [])


@dataclass
class SurveyReport:
    max_w: int
    max_h: int
    classes: int = 0
    disks: int = 0
    convex: int = 0
    thick_existential: int = 0
    thick_universal: int = 0
    # convex disks failing thickness: no curve passes / some curve fails
    counterexamples: list = field(default_factory=list)
    universal_counterexamples: list = field(default_factory=list)

    @property
    def summary(self) -> str:
        if not self.disks:
            return "vacuous: no disks fit these bounds"
        head = (f"{len(self.counterexamples)} convex disk(s) with no thick bounding curve"
                if self.counterexamples else "no counterexample up to bounds")
        if self.universal_counterexamples:
            head += (f"; {len(self.universal_counterexamples)} convex disk(s) have some bounding curve "
                     "that fails the thickness clauses")
        return head

    def to_dict(self) -> dict:
        return {"bounds": [self.max_w, self.max_h], "classes": self.classes, "disks": self.disks,
                "convex": self.convex, "thick_existential": self.thick_existential,
                "thick_universal": self.thick_universal, "counterexamples": self.counterexamples,
                "universal_counterexamples": self.universal_counterexamples, "summary": self.summary}


def examine(pts) -> dict:
    """Disk / convex / thick verdicts for one point set."""
    img = DigitalImage.from_points(pts, 2)
    if not find_bounding_curves(img, "canonical"):
        return {"disk": False, "convex": False}
    cert = is_digitally_convex(img)
    out = {"disk": True, "convex": cert.convex}
    if cert.convex:
        r = thickness_readings(img)
        out.update(existential=r.existential, universal=r.universal)
    return out


def _survey_box(args) -> dict:
    w, h, max_w, max_h = args
    part = SurveyReport(max_w, max_h)
    for pts in hv_convex_sets(w, h):
        key = canonical_form(pts, max_w, max_h)
        if key != tuple(sorted(pts)):
            continue
        part.classes += 1
        res = examine(key)
        part.disks += res["disk"]
        if not res["convex"]:
            continue
        part.convex += 1
        part.thick_existential += res["existential"]
        part.thick_universal += res["universal"]
        rec = [list(p) for p in key]
        if not res["existential"]:
            part.counterexamples.append(rec)
        if not res["universal"]:
            part.universal_counterexamples.append(rec)
    return part


def search_open_question(max_w: int = 5, max_h: int = 5, limit: int = MAX_SIDE, workers: int = 1,
                         progress: Callable[[str], None] | None = None) -> SurveyReport:
    """Look for convex disks that are not thick within a max_w x max_h box.

    Bounds above ``limit`` are refused. A clean report only speaks for the
    bounds searched. Boxes are independent and may run on ``workers``
    processes; partial reports are merged in box order.
    """
    if max_w < 1 or max_h < 1:
        raise ValueError("bounds must be positive")
    if max_w > limit or max_h > limit:
        raise ValueError(f"bounds {max_w}x{max_h} exceed the {limit}x{limit} search limit")
    jobs = [(w, h, max_w, max_h) for w in range(1, max_w + 1) for h in range(1, max_h + 1)]
    report = SurveyReport(max_w, max_h)
    if workers > 1:
        pool = ProcessPoolExecutor(max_workers=workers)
        parts = pool.map(_survey_box, jobs)
    else:
        pool, parts = None, map(_survey_box, jobs)
    try:
        for (w, h, _, _), part in zip(jobs, parts):
            for name in ("classes", "disks", "convex", "thick_existential", "thick_universal"):
                setattr(report, name, getattr(report, name) + getattr(part, name))
            report.counterexamples += part.counterexamples
            report.universal_counterexamples += part.universal_counterexamples
            if progress:
                progress(f"open-question: {w}x{h} done, {report.classes} classes, {report.convex} convex")
    finally:
        if pool is not None:
            pool.shutdown()
    return report
