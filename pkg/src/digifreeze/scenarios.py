"""Named, reproducible checks on the worked examples and figures.

Each scenario computes a dict of observations. The verdicts those
observations must match live in :data:`EXPECTED`, apart from the engine, and
:func:`run_scenario` compares the two.
"""

from __future__ import annotations

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .constructions import boundary_curves, c1_candidate, c2_candidate, corner_set, theorem_claims
from .convex import is_digitally_convex, is_thick, thickness_readings
from .grid import C1, C2, Adjacency, DigitalImage, box, is_connected, unique_shortest_path
from .planar import NotADiskError, boundary, find_bounding_curves, is_closed_curve, validate_bounding_curve
from .rigidity import (SearchUndecided, SelfMap, brute_force_witness_exists, enumerate_continuous_maps,
                       find_witness, is_continuous, is_freezing_set, is_minimal_freezing_set,
                       pulling_violations, shortest_path_violations)
from .survey import search_open_question


@dataclass
class Settings:
    node_cap: int | None = None
    time_cap: float | None = None
    threads: int = 1
    pulling: bool = True
    progress: Callable[[str], None] | None = None

    def search(self) -> dict:
        return {"pulling": self.pulling, "node_cap": self.node_cap, "time_cap": self.time_cap}

    def note(self, msg: str):
        if self.progress:
            self.progress(msg)


def _pts(ps):
    return [list(p) for p in ps]


# --- images -------------------------------------------------------------------

def notched_rectangle() -> DigitalImage:
    """[0,3] x [0,6] without (3,3)."""
    return box(3, 6).without((3, 3))


def diamond() -> DigitalImage:
    return DigitalImage.from_points([(x, y) for x in range(-1, 2) for y in range(-1, 2) if abs(x) + abs(y) < 2])


def clipped_square() -> DigitalImage:
    return box(3, 3).without((3, 3))


def two_holes() -> DigitalImage:
    return box(6, 2).without((3, 2))


def convex_pentagon() -> DigitalImage:
    return box(4, 4).without((0, 3), (0, 4), (1, 4))


# Small disks found by search that fail thickness at a chosen point.
NOT_THICK_SLANT = DigitalImage.from_points([(0, 3), (1, 2), (1, 3), (2, 1), (2, 2), (3, 0), (3, 1), (3, 2), (4, 1)])
NOT_THICK_ANGLE = DigitalImage.from_points([(0, 2), (0, 3), (1, 1), (1, 2), (2, 0), (2, 1), (2, 2), (3, 1)])

CORNER_SET_C1 = [(0, 0), (3, 0), (3, 2), (3, 4), (3, 6), (0, 6)]

# Single-point moves certifying that no point can be dropped.
CORNER_MOVES_C1 = {(0, 0): (1, 1), (3, 0): (2, 1), (3, 2): (2, 1), (3, 4): (2, 5), (3, 6): (2, 5), (0, 6): (1, 5)}


def _boundary_moves_c2() -> dict:
    moves = {(0, 0): (1, 1), (0, 6): (1, 5), (3, 6): (2, 5), (3, 0): (2, 1)}
    moves.update({(i, 0): (i, 1) for i in (1, 2)})
    moves.update({(0, j): (1, j) for j in range(1, 6)})
    moves.update({(i, 6): (i, 5) for i in (1, 2)})
    moves.update({(3, j): (2, j) for j in (1, 2, 4, 5)})
    return moves


BOUNDARY_MOVES_C2 = _boundary_moves_c2()


def _check_moves(X: DigitalImage, adj: Adjacency, moves: dict) -> dict:
    out = {}
    for p, q in sorted(moves.items()):
        f = SelfMap.from_mapping(X, {p: q})
        fix_ok = set(f.fixed_points()) == set(X.points) - {p}
        out[p] = is_continuous(f, adj) and fix_ok
    return out


# --- scenarios ----------------------------------------------------------------

def _example_3_3(s: Settings):
    D = notched_rectangle()
    rep = is_minimal_freezing_set(D, C1, CORNER_SET_C1, workers=s.threads, **s.search())
    moves = _check_moves(D, C1, CORNER_MOVES_C1)
    obs = {"points": len(D), "status": rep.status, "minimal_status": rep.minimal_status,
           "explicit_maps": all(moves.values())}
    return obs, {"report": rep.to_dict(), "explicit_maps": [[list(p), ok] for p, ok in moves.items()]}


def _example_4_1(s: Settings):
    D = notched_rectangle()
    B = [p for p in boundary(D) if p != (2, 3)]
    rep = is_minimal_freezing_set(D, C2, B, workers=s.threads, **s.search())
    moves = _check_moves(D, C2, BOUNDARY_MOVES_C2)
    obs = {"size": len(B), "status": rep.status, "minimal_status": rep.minimal_status,
           "explicit_maps": all(moves.values()) and set(moves) == set(B)}
    return obs, {"report": rep.to_dict(), "explicit_maps": [[list(p), ok] for p, ok in moves.items()]}


def _construction_not_minimal(s: Settings):
    D = notched_rectangle()
    claim = next(c for c in theorem_claims(D) if c.label == "c1_construction")
    rep = is_minimal_freezing_set(D, C1, claim.candidate.points, workers=s.threads, **s.search())
    removable = sorted(p for p, w in rep.minimality.items() if w is None) if rep.minimality else []
    obs = {"contains_2_3": (2, 3) in claim.candidate.points, "claim": claim.claim,
           "status": rep.status, "minimal_status": rep.minimal_status,
           "2_3_removable": (2, 3) in removable}
    return obs, {"candidate": _pts(claim.candidate.points), "removable": _pts(removable),
                 "report": rep.to_dict()}


def _diamond(s: Settings):
    D = diamond()
    S = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    dec = validate_bounding_curve(D, S)
    obs = {"disk": True, "curve_size": dec.size, "c2_connected": is_connected(S, C2),
           "c1_connected": is_connected(S, C1), "interior": _pts(dec.curve_interior)}
    return obs, {"curve": _pts(dec.curve.points)}


def _two_curves(s: Settings):
    D = clipped_square()
    canon = find_bounding_curves(D, "canonical")[0]
    c1_simple = True
    try:
        is_closed_curve(canon.curve.points, C1, jct=True)
    except ValueError:
        c1_simple = False
    every = find_bounding_curves(D, "all")
    minimal = find_bounding_curves(D, "minimal")[0]
    obs = {"canonical_size": canon.size, "canonical_c1_simple": c1_simple, "minimal_size": minimal.size,
           "least_of_all": min(d.size for d in every), "minimal_exact": not minimal.heuristic}
    return obs, {"canonical": _pts(canon.curve.points), "minimal": _pts(minimal.curve.points),
                 "curves_enumerated": len(every)}


def _canonical_caution(s: Settings):
    D = clipped_square()
    canon = c1_candidate(find_bounding_curves(D, "canonical")[0])
    minimal = c1_candidate(find_bounding_curves(D, "minimal")[0])
    obs = {"canonical_suggests_2_2": (2, 2) in canon.points, "2_2_in_boundary": (2, 2) in boundary(D),
           "minimal_suggests_2_2": (2, 2) in minimal.points}
    return obs, {"canonical_candidate": _pts(canon.points), "minimal_candidate": _pts(minimal.points)}


def _not_a_disk(s: Settings):
    D = two_holes()
    curves = boundary_curves(D)
    try:
        validate_bounding_curve(D, curves[0].points)
        clause, bounded = None, []
    except NotADiskError as exc:
        clause, bounded = exc.clause, [_pts(c) for c in exc.bounded]
    obs = {"disk": bool(find_bounding_curves(D, "canonical")), "clause": clause, "bounded": bounded}
    return obs, {"curve": _pts(curves[0].points)}


def _convex_disk(s: Settings):
    D = convex_pentagon()
    dec = find_bounding_curves(D, "minimal")[0]
    a, b = c1_candidate(dec), c2_candidate(dec)
    ra = is_minimal_freezing_set(D, C1, a.points, workers=s.threads, **s.search())
    rb = is_minimal_freezing_set(D, C2, b.points, workers=s.threads, **s.search())
    obs = {"convex": is_digitally_convex(D).convex, "thick": is_thick(dec).thick, "c1_candidate": _pts(a.points),
           "c1_status": ra.status, "c1_minimal": ra.minimal_status, "c2_excludes_1_3": (1, 3) not in b.points,
           "c2_size": len(b), "c2_status": rb.status, "c2_minimal": rb.minimal_status}
    return obs, {"curve": _pts(dec.curve.points), "c1_report": ra.to_dict(), "c2_report": rb.to_dict()}


def _box_corners(s: Settings):
    rows, verdicts = [], []
    for m1, m2 in itertools.product(range(1, 6), repeat=2):
        X = box(m1, m2)
        rep = is_minimal_freezing_set(X, C1, corner_set((m1, m2)).points, workers=s.threads, **s.search())
        rows.append({"box": [m1, m2], "status": rep.status, "minimal_status": rep.minimal_status,
                     "stats": rep.stats.to_dict()})
        verdicts.append(rep.minimal_status)
        s.note(f"box-corners: [0,{m1}]x[0,{m2}] {rep.minimal_status}")
    rows.append({"box": [1], **_line_corners(s)})
    obs = {"cases": len(verdicts), "all_minimal": all(v == "minimal" for v in verdicts),
           "interval_minimal": rows[-1]["minimal_status"] == "minimal"}
    return obs, {"boxes": rows}


def _line_corners(s: Settings) -> dict:
    X = box(1)
    rep = is_minimal_freezing_set(X, Adjacency(1, 1), corner_set((1,)).points, **s.search())
    return {"status": rep.status, "minimal_status": rep.minimal_status}


def _cube_corners(s: Settings):
    X = box(2, 2, 2)
    rep = is_freezing_set(X, Adjacency(3, 1), corner_set((2, 2, 2)).points, **s.search())
    return {"corners": len(corner_set((2, 2, 2))), "status": rep.status}, {"report": rep.to_dict()}


def _not_thick(image, point, clause):
    def run(s: Settings):
        r = thickness_readings(image)
        canon = find_bounding_curves(image, "canonical")[0]
        obs = {"disk": True, "thick": r.existential, "violation": [list(point), clause] in
               [[list(p), c] for p, c in is_thick(canon).violations]}
        return obs, {"curves_checked": len(r.per_curve), "canonical": _pts(canon.curve.points)}
    return run


def _open_question(s: Settings):
    rep = search_open_question(5, 5, workers=s.threads, progress=s.progress)
    return {"terminated": True}, {"survey": rep.to_dict()}


# --- randomized property suite ------------------------------------------------

RANDOM_IMAGES = 120
RANDOM_SEED = 20240611
MAP_CAP = 400


def random_image(rng: random.Random, max_points: int = 9) -> DigitalImage:
    """A random 4-connected image grown cell by cell from the origin; half the
    time new cells favour spots with many occupied neighbours."""
    size = rng.randint(1, max_points)
    compact = rng.random() < 0.5
    pts = {(0, 0)}
    while len(pts) < size:
        frontier = sorted({(x + dx, y + dy) for x, y in pts for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1))} - pts)
        if compact:
            weights = [sum((x + dx, y + dy) in pts for dx in (-1, 0, 1) for dy in (-1, 0, 1)) ** 2
                       for x, y in frontier]
            pts.add(rng.choices(frontier, weights)[0])
        else:
            pts.add(rng.choice(frontier))
    return DigitalImage.from_points(pts)


def property_case(args) -> dict:
    """All randomized property checks on one image; returns counts and failures."""
    pts, seed, search = args
    X = DigitalImage.from_points(pts, 2)
    rng = random.Random(seed)
    out = {"points": len(X), "oracle_checks": 0, "curves": 0, "maps": 0, "failures": []}
    bd = boundary(X)
    subset = tuple(p for p in X if rng.random() < 0.5)
    probe = (rng.choice(X.points),)
    curves = find_bounding_curves(X, "all") if len(X) >= 5 else []
    for adj in (C1, C2):
        for A in ((), bd, subset, probe):
            oracle = brute_force_witness_exists(X, adj, A)
            for pulling in (True, False):
                w = find_witness(X, adj, A, **{**search, "pulling": pulling})
                out["oracle_checks"] += 1
                if (w is not None) != oracle:
                    out["failures"].append(["oracle", adj.name, _pts(A), pulling])
        if find_witness(X, adj, bd, **search) is not None:
            out["failures"].append(["boundary", adj.name])
        for dec in curves:
            out["curves"] += 1
            if find_witness(X, adj, dec.curve.points, **search) is not None:
                out["failures"].append(["curve", adj.name, _pts(dec.curve.points)])
        paths = {}
        for x, y in itertools.combinations(X.points, 2):
            path = unique_shortest_path(X, adj, x, y)
            if path is not None:
                paths[(x, y)] = path
        for f in itertools.islice(enumerate_continuous_maps(X, adj, probe), MAP_CAP):
            out["maps"] += 1
            if pulling_violations(f, adj):
                out["failures"].append(["pulling", adj.name, [[list(p), list(q)] for p, q in f.moved().items()]])
            if shortest_path_violations(f, paths):
                out["failures"].append(["shortest-path", adj.name, [[list(p), list(q)] for p, q in f.moved().items()]])
    out["disk"] = bool(curves)
    return out


def _random_properties(s: Settings):
    rng = random.Random(RANDOM_SEED)
    jobs = []
    for _ in range(RANDOM_IMAGES):
        X = random_image(rng)
        jobs.append((X.points, rng.randrange(2 ** 32), s.search()))
    if s.threads > 1:
        with ProcessPoolExecutor(max_workers=s.threads) as pool:
            results = list(pool.map(property_case, jobs))
    else:
        results = [property_case(j) for j in jobs]
    failures = [[i] + f for i, r in enumerate(results) for f in r["failures"]]
    totals = {k: sum(r[k] for r in results) for k in ("oracle_checks", "curves", "maps")}
    obs = {"images_at_least_100": len(results) >= 100, "max_points_at_most_9": max(r["points"] for r in results) <= 9,
           "failures": len(failures)}
    return obs, {"images": len(results), "disks": sum(r["disk"] for r in results), **totals,
                 "failure_list": failures}


@dataclass(frozen=True)
class Scenario:
    name: str
    summary: str
    run: Callable


SCENARIOS = {sc.name: sc for sc in [
    Scenario("example-3.3", "six corner points freeze the notched rectangle under c1, minimally", _example_3_3),
    Scenario("example-4.1", "boundary minus (2,3) freezes the notched rectangle under c2, minimally", _example_4_1),
    Scenario("construction-not-minimal", "the c1 construction on the notched rectangle freezes but is not minimal",
             _construction_not_minimal),
    Scenario("diamond-curve", "the diamond's bounding curve is 8-connected but not 4-connected", _diamond),
    Scenario("two-bounding-curves", "a 12-point 4-simple curve and an 11-point minimal curve", _two_curves),
    Scenario("canonical-curve-caution", "the traced curve suggests an interior point; the minimal one does not",
             _canonical_caution),
    Scenario("fig-3-not-a-disk", "a curve with two bounded complementary components", _not_a_disk),
    Scenario("convex-thick-disk", "convex thick disk; both constructions are minimal freezing sets", _convex_disk),
    Scenario("box-corners", "corners of every box up to [0,5]x[0,5] are minimal freezing sets under c1", _box_corners),
    Scenario("cube-corners", "corners of [0,2]^3 freeze under c1", _cube_corners),
    Scenario("not-thick-slant", "a disk failing the slanted-segment clause at (1,2)",
             _not_thick(NOT_THICK_SLANT, (1, 2), "slant")),
    Scenario("not-thick-angle", "a disk failing the 135-degree clause at (0,2)",
             _not_thick(NOT_THICK_ANGLE, (0, 2), "angle135")),
    Scenario("random-properties", "randomized images checked against brute force and the known theorems",
             _random_properties),
    Scenario("open-question-5x5", "search for convex disks that are not thick in boxes up to 5x5", _open_question),
]}

EXPECTED = {
    "example-3.3": {"points": 27, "status": "freezing", "minimal_status": "minimal", "explicit_maps": True},
    "example-4.1": {"size": 17, "status": "freezing", "minimal_status": "minimal", "explicit_maps": True},
    "construction-not-minimal": {"contains_2_3": True, "claim": "freezing", "status": "freezing",
                                 "minimal_status": "not-minimal", "2_3_removable": True},
    "diamond-curve": {"disk": True, "curve_size": 4, "c2_connected": True, "c1_connected": False,
                      "interior": [[0, 0]]},
    "two-bounding-curves": {"canonical_size": 12, "canonical_c1_simple": True, "minimal_size": 11,
                            "least_of_all": 11, "minimal_exact": True},
    "canonical-curve-caution": {"canonical_suggests_2_2": True, "2_2_in_boundary": False,
                                "minimal_suggests_2_2": False},
    "fig-3-not-a-disk": {"disk": False, "clause": "several-bounded", "bounded": [[[1, 1], [2, 1]], [[4, 1], [5, 1]]]},
    "convex-thick-disk": {"convex": True, "thick": True,
                          "c1_candidate": [[0, 0], [0, 2], [1, 3], [2, 4], [4, 0], [4, 4]],
                          "c1_status": "freezing", "c1_minimal": "minimal", "c2_excludes_1_3": True, "c2_size": 13,
                          "c2_status": "freezing", "c2_minimal": "minimal"},
    "box-corners": {"cases": 25, "all_minimal": True, "interval_minimal": True},
    "cube-corners": {"corners": 8, "status": "freezing"},
    "not-thick-slant": {"disk": True, "thick": False, "violation": True},
    "not-thick-angle": {"disk": True, "thick": False, "violation": True},
    "random-properties": {"images_at_least_100": True, "max_points_at_most_9": True, "failures": 0},
    "open-question-5x5": {"terminated": True},
}


@dataclass
class ScenarioResult:
    name: str
    status: str  # "pass", "fail" or "undecided"
    checks: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"scenario": self.name, "status": self.status,
                "checks": [{"check": k, "expected": e, "observed": o, "ok": e == o} for k, e, o in self.checks],
                "details": self.details}


def _undecided(details) -> bool:
    if isinstance(details, dict):
        if details.get("status") == "undecided" or details.get("minimal_status") == "undecided":
            return True
        return any(_undecided(v) for v in details.values())
    if isinstance(details, list):
        return any(_undecided(v) for v in details)
    return False


def run_scenario(name: str, settings: Settings | None = None) -> ScenarioResult:
    if name not in SCENARIOS:
        raise KeyError(f"unknown scenario {name!r}; known: {', '.join(sorted(SCENARIOS))}")
    s = settings or Settings()
    s.note(f"scenario {name}: running")
    try:
        observed, details = SCENARIOS[name].run(s)
    except SearchUndecided as exc:
        return ScenarioResult(name, "undecided", details={"reason": str(exc)})
    checks = [(k, e, observed.get(k)) for k, e in EXPECTED[name].items()]
    ok = all(e == o for _, e, o in checks)
    status = "pass" if ok else ("undecided" if _undecided(details) else "fail")
    s.note(f"scenario {name}: {status}")
    return ScenarioResult(name, status, checks, details)
