"""Named candidate freezing sets and the claims made about them.

The constructions only build point sets. Whether a claim holds is decided by
:mod:`digifreeze.rigidity`; :func:`verify_claim` wires the two together.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .convex import convex_hull, curve_matches_hull, is_digitally_convex, is_thick
from .grid import C1, C2, Adjacency, DigitalImage, Point, components
from .planar import (CurveCycle, DiskDecomposition, Segment, boundary, curve_segments, enumerate_cycles,
                     find_bounding_curves, is_closed_curve)
from .rigidity import FreezingReport, is_freezing_set, is_minimal_freezing_set

CONSTRUCTIONS = ("corners", "c1_A1A2", "c2_B1B2", "boundary", "bounding_curve", "custom")


@dataclass(frozen=True)
class CandidateSet:
    points: tuple[Point, ...]
    construction: str
    provenance: dict = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self):
        if self.construction not in CONSTRUCTIONS:
            raise ValueError(f"unknown construction {self.construction!r}")
        object.__setattr__(self, "points", tuple(sorted({tuple(p) for p in self.points})))

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)



def corner_set(extents: Sequence[int], origin: Sequence[int] | None = None) -> CandidateSet:
    """The 2^n corners of the box ``prod [o_i, o_i + m_i]``."""
    if any(m < 1 for m in extents):
        raise ValueError("every extent must be at least 1")
    origin = tuple(origin or (0,) * len(extents))
    pts = itertools.product(*[(o, o + m) for o, m in zip(origin, extents)])
    return CandidateSet(tuple(pts), "corners", {"extents": tuple(extents), "origin": origin})


def _split(segments: Sequence[Segment]):
    axis_ends, axis_all, slant_ends, slant_all = set(), set(), set(), set()
    for seg in segments:
        if seg.slanted:
            slant_ends.update(seg.endpoints)
            slant_all.update(seg.points)
        else:
            axis_ends.update(seg.endpoints)
            axis_all.update(seg.points)
    return axis_ends, axis_all, slant_ends, slant_all


def _curve_provenance(curves: Sequence[CurveCycle], **extra) -> dict:
    return {"curves": tuple(c.points for c in curves), **extra}


def c1_candidate(dec: DiskDecomposition | Sequence[CurveCycle]) -> CandidateSet:
    """Endpoints of maximal horizontal/vertical segments plus every point of a slanted segment."""
    curves, extra = _curves_of(dec)
    segs = [s for c in curves for s in curve_segments(c)]
    axis_ends, _, _, slant_all = _split(segs)
    return CandidateSet(tuple(axis_ends | slant_all), "c1_A1A2", _curve_provenance(curves, **extra))


def c2_candidate(dec: DiskDecomposition | Sequence[CurveCycle]) -> CandidateSet:
    """Endpoints of maximal slanted segments plus every point of a horizontal/vertical segment."""
    curves, extra = _curves_of(dec)
    segs = [s for c in curves for s in curve_segments(c)]
    _, axis_all, slant_ends, _ = _split(segs)
    return CandidateSet(tuple(slant_ends | axis_all), "c2_B1B2", _curve_provenance(curves, **extra))


def _curves_of(dec):
    if isinstance(dec, DiskDecomposition):
        return [dec.curve], {"source": "bounding curve", "method": dec.method}
    return list(dec), {"source": "boundary curves"}


def boundary_candidate(X: DigitalImage) -> CandidateSet:
    return CandidateSet(boundary(X), "boundary", {})


def curve_candidate(dec: DiskDecomposition) -> CandidateSet:
    return CandidateSet(dec.curve.points, "bounding_curve", _curve_provenance([dec.curve], method=dec.method))


def boundary_curves(X: DigitalImage) -> list[CurveCycle] | None:
    """Split Bd(X) into disjoint c2-closed curves, one per c2-component.

    Returns None when some component admits no closed curve through all of
    its points.
    """
    out = []
    for comp in components(boundary(X), C2):
        cyc = next(enumerate_cycles(comp, comp), None)
        if cyc is None:
            return None
        out.append(is_closed_curve(cyc, C2))
    return out


def rebuild(candidate: CandidateSet, image: DigitalImage | None = None) -> CandidateSet:
    """Recompute a candidate from its provenance alone."""
    kind, prov = candidate.construction, candidate.provenance
    if kind == "corners":
        return corner_set(prov["extents"], prov["origin"])
    if kind == "boundary":
        return boundary_candidate(image)
    curves = [is_closed_curve(c, C2) for c in prov.get("curves", ())]
    if kind == "bounding_curve":
        return CandidateSet(curves[0].points, kind, candidate.provenance)
    if kind == "c1_A1A2":
        return CandidateSet(c1_candidate(curves).points, kind, candidate.provenance)
    if kind == "c2_B1B2":
        return CandidateSet(c2_candidate(curves).points, kind, candidate.provenance)
    return candidate


@dataclass
class Claim:
    label: str
    candidate: CandidateSet
    adjacency: Adjacency
    claim: str  # "freezing" or "minimal_freezing"
    hypotheses: dict = field(default_factory=dict)


def _as_box(X: DigitalImage):
    if not len(X):
        return None
    lo, hi = X.bounds()
    ext = tuple(h - l for l, h in zip(lo, hi))
    count = 1
    for m in ext:
        count *= m + 1
    if count != len(X) or any(m < 1 for m in ext):
        return None
    return ext, lo


def theorem_claims(X: DigitalImage, curve_mode: str = "minimal") -> list[Claim]:
    """Every claim the known constructions make about X.

    Minimality is claimed only where its hypotheses check out: corner sets of
    1- and 2-dimensional boxes under c1, and the c1/c2 curve constructions on
    a convex disk whose chosen curve matches the hull and is thick.
    """
    claims = []
    bd = boundary_candidate(X)
    for u in range(1, X.dimension + 1):
        claims.append(Claim("boundary", bd, Adjacency(X.dimension, u), "freezing"))

    as_box = _as_box(X)
    if as_box is not None:
        ext, lo = as_box
        kind = "minimal_freezing" if X.dimension <= 2 else "freezing"
        claims.append(Claim("corners", corner_set(ext, lo), Adjacency(X.dimension, 1), kind,
                            {"box": True, "dimension": X.dimension}))
    if X.dimension != 2:
        return claims

    decs = find_bounding_curves(X, curve_mode) if len(X) else []
    if decs:
        dec = decs[0]
        cert = is_digitally_convex(X)
        matches = curve_matches_hull(dec, convex_hull(X))
        thick = is_thick(dec)
        hyp = {"disk": True, "curve_method": dec.method, "curve_size": dec.size, "convex": cert.convex,
               "curve_matches_hull": matches, "thick": thick.thick,
               "thick_violations": [list(p) + [c] for p, c in thick.violations]}
        strong = cert.convex and matches and thick.thick
        kind = "minimal_freezing" if strong else "freezing"
        cand = curve_candidate(dec)
        claims.append(Claim("bounding_curve", cand, C1, "freezing", hyp))
        claims.append(Claim("bounding_curve", cand, C2, "freezing", hyp))
        claims.append(Claim("c1_construction", c1_candidate(dec), C1, kind, hyp))
        claims.append(Claim("c2_construction", c2_candidate(dec), C2, kind, hyp))
        return claims

    curves = boundary_curves(X) if len(X) else None
    if curves:
        hyp = {"disk": False, "boundary_curves": len(curves)}
        claims.append(Claim("c1_construction", c1_candidate(curves), C1, "freezing", hyp))
        claims.append(Claim("c2_construction", c2_candidate(curves), C2, "freezing", hyp))
    return claims


@dataclass
class ClaimCheck:
    claim: Claim
    report: FreezingReport

    @property
    def consistent(self) -> bool | None:
        """True if the search confirms the claim, False if it refutes it, None if undecided."""
        if self.report.undecided:
            return None
        if self.claim.claim == "minimal_freezing":
            return bool(self.report.is_freezing and self.report.is_minimal)
        return bool(self.report.is_freezing)


def verify_claim(X: DigitalImage, claim: Claim, **search) -> ClaimCheck:
    if claim.claim == "minimal_freezing":
        report = is_minimal_freezing_set(X, claim.adjacency, claim.candidate.points, **search)
    else:
        search.pop("workers", None)
        report = is_freezing_set(X, claim.adjacency, claim.candidate.points, **search)
    return ClaimCheck(claim, report)
