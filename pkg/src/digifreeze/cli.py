"""Command-line entry point: ``digifreeze <command> ...``.

Results go to stdout as JSON (or as a picture for ``render``); progress goes
to stderr. Exit codes: 0 success, 1 verdict mismatch or negative verdict,
2 undecided within the resource caps, 3 bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from .constructions import c1_candidate, c2_candidate, theorem_claims, verify_claim
from .convex import is_digitally_convex, thickness_readings
from .grid import adjacency
from .io import ParseError, emit, read_image
from .planar import NotADiskError, boundary, find_bounding_curves, interior, maximal_segments
from .render import Overlays, RenderError, render
from .rigidity import is_freezing_set, is_minimal_freezing_set
from .scenarios import SCENARIOS, Settings, run_scenario
from .survey import MAX_SIDE, search_open_question

EXIT_OK, EXIT_MISMATCH, EXIT_UNDECIDED, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


_NUMBER_LIST = re.compile(r"\[\s*(-?\d+(?:,\s*-?\d+)*)\s*\]")


def _emit(obj):
    text = json.dumps(obj, indent=2)
    # keep coordinate lists on one line
    text = _NUMBER_LIST.sub(lambda m: "[" + ", ".join(v.strip() for v in m.group(1).split(",")) + "]", text)
    sys.stdout.write(text + "\n")


def _progress(msg: str):
    print(msg, file=sys.stderr, flush=True)


def _pts(ps):
    return [list(p) for p in ps]


def _load(path):
    try:
        return read_image(path)
    except OSError as exc:
        raise InputError(str(exc)) from None
    except ParseError as exc:
        raise InputError(f"{path}: {exc}") from None


def _adjacency(args, doc):
    if getattr(args, "adjacency", None):
        return adjacency(args.adjacency, doc.image.dimension)
    if doc.adjacency is not None:
        return doc.adjacency
    raise InputError("no adjacency given; pass --adjacency or declare one in the file")


def _settings(args) -> Settings:
    return Settings(args.node_cap, args.time_cap, args.threads, not args.no_pulling, _progress)


def _decomposition(doc, mode):
    if doc.curve is not None:
        try:
            return doc.bounding_curve()
        except (NotADiskError, ValueError) as exc:
            raise InputError(f"declared curve rejected: {exc}") from None
    decs = find_bounding_curves(doc.image, mode)
    if not decs:
        raise InputError("image is not a disk: no bounding curve found")
    return decs[0]


# --- commands -----------------------------------------------------------------

def cmd_parse(args):
    doc = _load(args.file)
    sys.stdout.write(emit(doc, args.format))
    return EXIT_OK


def cmd_bd(args):
    doc = _load(args.file)
    _emit({"boundary": _pts(boundary(doc.image)), "interior": _pts(interior(doc.image))})
    return EXIT_OK


def cmd_curves(args):
    doc = _load(args.file)
    try:
        decs = find_bounding_curves(doc.image, args.mode)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    out = []
    for dec in decs:
        seg = maximal_segments(dec)
        out.append({"method": dec.method, "heuristic": dec.heuristic, "size": dec.size,
                    "curve": _pts(dec.curve.points), "interior": _pts(dec.curve_interior),
                    "segments": [{"orientation": s.orientation, "points": _pts(s.points)} for s in seg.segments],
                    "angles": [[list(p), a] for p, a in seg.angles]})
    _emit({"disk": bool(decs), "mode": args.mode, "curves": out})
    return EXIT_OK


def cmd_convex(args):
    doc = _load(args.file)
    cert = is_digitally_convex(doc.image)
    _emit({"convex": cert.convex, "clause": cert.clause, "reason": cert.reason,
           "hull": _pts(cert.hull.vertices) if cert.hull else None,
           "curve": _pts(cert.curve.curve.points) if cert.curve else None})
    return EXIT_OK


def cmd_thick(args):
    doc = _load(args.file)
    if doc.curve is not None:
        r = thickness_readings(doc.image, [_decomposition(doc, "canonical")])
    else:
        r = thickness_readings(doc.image)
    if not r.per_curve:
        raise InputError("image is not a disk: no bounding curve found")
    _emit({"thick": r.existential, "thick_for_every_curve": r.universal, "curves_checked": len(r.per_curve),
           "witness_curve": _pts(r.witness.curve.points) if r.witness else None,
           "violations": [{"curve": _pts(d.curve.points), "violations": [[list(p), c] for p, c in rep.violations]}
                          for d, rep in r.per_curve if rep.violations]})
    return EXIT_OK


def cmd_candidate(args):
    doc = _load(args.file)
    adj = _adjacency(args, doc)
    dec = _decomposition(doc, args.curve)
    cand = c1_candidate(dec) if adj.order == 1 else c2_candidate(dec)
    claim = next((c for c in theorem_claims(doc.image, args.curve)
                  if c.candidate.construction == cand.construction), None)
    _emit({"construction": cand.construction, "adjacency": adj.name, "points": _pts(cand.points),
           "curve": _pts(dec.curve.points), "claim": claim.claim if claim else None,
           "hypotheses": claim.hypotheses if claim else None})
    return EXIT_OK


def _report_exit(report, minimal):
    if report.undecided:
        return EXIT_UNDECIDED
    ok = report.is_freezing and (report.is_minimal if minimal else True)
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_verify(args):
    doc = _load(args.file)
    adj = _adjacency(args, doc)
    A = _load(args.set).image.points
    missing = [p for p in A if p not in doc.image]
    if missing:
        raise InputError(f"set points outside the image: {_pts(missing)}")
    s = _settings(args)
    if args.minimal:
        rep = is_minimal_freezing_set(doc.image, adj, A, workers=args.threads, **s.search())
    else:
        rep = is_freezing_set(doc.image, adj, A, **s.search())
    _emit(rep.to_dict(timings=args.timings))
    return _report_exit(rep, args.minimal)


def cmd_claims(args):
    doc = _load(args.file)
    s = _settings(args)
    out = []
    for claim in theorem_claims(doc.image, args.curve):
        chk = verify_claim(doc.image, claim, workers=args.threads, **s.search())
        out.append({"label": claim.label, "adjacency": claim.adjacency.name, "claim": claim.claim,
                    "consistent": chk.consistent, "hypotheses": claim.hypotheses, "report": chk.report.to_dict()})
    _emit(out)
    verdicts = [c["consistent"] for c in out]
    if False in verdicts:
        return EXIT_MISMATCH
    return EXIT_UNDECIDED if None in verdicts else EXIT_OK


def cmd_scenario(args):
    if args.all == bool(args.name):
        raise InputError("give a scenario name or --all")
    names = sorted(SCENARIOS) if args.all else [args.name]
    for n in names:
        if n not in SCENARIOS:
            raise InputError(f"unknown scenario {n!r}; known: {', '.join(sorted(SCENARIOS))}")
    results = [run_scenario(n, _settings(args)).to_dict() for n in names]
    _emit(results if args.all else results[0])
    statuses = {r["status"] for r in results}
    if "fail" in statuses:
        return EXIT_MISMATCH
    if "undecided" in statuses:
        return EXIT_UNDECIDED
    return EXIT_OK


def cmd_open_question(args):
    try:
        rep = search_open_question(args.max_w, args.max_h, workers=args.threads, progress=_progress)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    _emit(rep.to_dict())
    return EXIT_OK


def cmd_render(args):
    doc = _load(args.file)
    wanted = {w for item in args.overlay for w in item.split(",") if w}
    unknown = wanted - {"boundary", "curve", "candidate", "witness"}
    if unknown:
        raise InputError(f"unknown overlays {sorted(unknown)}")
    ov = Overlays()
    if "boundary" in wanted:
        ov.boundary = boundary(doc.image)
    if "curve" in wanted or "candidate" in wanted:
        dec = _decomposition(doc, args.curve)
        if "curve" in wanted:
            ov.curve = dec.curve.points
    if "candidate" in wanted or "witness" in wanted:
        adj = _adjacency(args, doc)
    if "candidate" in wanted:
        if args.set:
            ov.candidate = _load(args.set).image.points
        else:
            ov.candidate = (c1_candidate(dec) if adj.order == 1 else c2_candidate(dec)).points
        ov.label = "a" if adj.order == 1 else "b"
    if "witness" in wanted:
        if not args.set:
            raise InputError("witness overlay needs --set (the pinned set)")
        A = _load(args.set).image.points
        rep = is_freezing_set(doc.image, adj, A, **_settings(args).search())
        ov.witness = rep.witness
    try:
        sys.stdout.write(render(doc.image, ov, args.format))
    except RenderError as exc:
        raise InputError(str(exc)) from None
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--node-cap", type=int, default=None, help="search node budget per search")
    common.add_argument("--time-cap", type=float, default=None, help="wall-clock budget per search, seconds")
    common.add_argument("--threads", type=int, default=1, help="worker processes for independent searches")
    common.add_argument("--no-pulling", action="store_true", help="propagate by arc consistency only")
    common.add_argument("--timings", action="store_true", help="include wall time in reports")

    p = argparse.ArgumentParser(prog="digifreeze", description="Freezing sets of digital images in Z^2.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, file=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if file:
            sp.add_argument("file", help="image in grid or structured format")
        sp.set_defaults(fn=fn)
        return sp

    sp = add("parse", cmd_parse, "parse an image and print it in canonical form")
    sp.add_argument("--format", choices=["grid", "structured"], default=None)
    add("bd", cmd_bd, "boundary and interior points")
    sp = add("curves", cmd_curves, "bounding curves with segments and angles")
    sp.add_argument("--mode", choices=["canonical", "minimal", "all"], default="canonical")
    add("convex", cmd_convex, "digital convexity with certificate")
    add("thick", cmd_thick, "thickness under both readings")
    for name, fn, help_ in (("candidate", cmd_candidate, "the c1 or c2 curve construction"),
                            ("claims", cmd_claims, "every applicable construction claim, verified")):
        sp = add(name, fn, help_)
        sp.add_argument("--adjacency", choices=["c1", "c2"])
        sp.add_argument("--curve", choices=["canonical", "minimal"], default="minimal")
    sp = add("verify", cmd_verify, "decide whether a set freezes the image")
    sp.add_argument("--set", required=True, help="candidate set, grid or structured format")
    sp.add_argument("--adjacency", choices=["c1", "c2", "c3"])
    sp.add_argument("--minimal", action="store_true", help="also decide minimality")
    sp = add("scenario", cmd_scenario, "run a built-in scenario", file=False)
    sp.add_argument("name", nargs="?")
    sp.add_argument("--all", action="store_true")
    sp = add("open-question", cmd_open_question, "search for convex disks that are not thick", file=False)
    sp.add_argument("--max-w", type=int, default=5, help=f"at most {MAX_SIDE}")
    sp.add_argument("--max-h", type=int, default=5, help=f"at most {MAX_SIDE}")
    sp = add("render", cmd_render, "draw an image with overlays")
    sp.add_argument("--overlay", action="append", default=[],
                    help="boundary, curve, candidate, witness (repeat or comma-separate)")
    sp.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    sp.add_argument("--adjacency", choices=["c1", "c2"])
    sp.add_argument("--curve", choices=["canonical", "minimal"], default="minimal")
    sp.add_argument("--set", help="candidate set to mark, or pinned set for a witness")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.threads < 1:
        print("error: --threads must be at least 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
