"""Reading and writing images as text.

Two formats are accepted.

Grid format::

    @name example
    @adjacency c1
    @origin 0 0
    ####
    ###.
    ####

``#`` marks a member and ``.`` a non-member. The first grid row is the top
of the picture; ``@origin x y`` gives the lattice coordinates of the
bottom-left cell, so y grows upward as usual. An optional
``@curve x,y x,y ...`` line declares a bounding curve.

Structured format is a JSON object::

    {"name": "example", "adjacency": "c1",
     "points": [[0, 0], [1, 0]], "curve": [[0, 0], [1, 0]]}

Only ``points`` is required. Points may have any dimension.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .grid import Adjacency, DigitalImage, Point, adjacency
from .planar import DiskDecomposition, validate_bounding_curve

MEMBER, EMPTY = "#", "."


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = f"line {line}" if line is not None else ""
        if column is not None:
            where += f", column {column}"
        super().__init__(f"{where}: {message}" if where else message)
        self.line, self.column = line, column


@dataclass(frozen=True)
class ImageDocument:
    image: DigitalImage
    adjacency: Adjacency | None = None
    curve: tuple[Point, ...] | None = None
    name: str | None = None
    source: str = "grid"  # "grid" or "structured"

    def bounding_curve(self) -> DiskDecomposition:
        """Validate the declared curve against the image (raises NotADiskError)."""
        if self.curve is None:
            raise ValueError("document declares no curve")
        return validate_bounding_curve(self.image, self.curve)


def _parse_pair(text: str, line: int, column: int) -> Point:
    try:
        x, y = text.split(",")
        return int(x), int(y)
    except ValueError:
        raise ParseError(f"expected x,y but found {text!r}", line, column) from None


def _parse_header(raw: str, lineno: int, meta: dict):
    key, _, rest = raw[1:].partition(" ")
    rest = rest.strip()
    if key in meta:
        raise ParseError(f"repeated header @{key}", lineno, 1)
    if key == "origin":
        parts = rest.split()
        if len(parts) != 2:
            raise ParseError("@origin needs two integers", lineno, 1)
        try:
            meta[key] = (int(parts[0]), int(parts[1]))
        except ValueError:
            raise ParseError("@origin needs two integers", lineno, 1) from None
    elif key == "name":
        meta[key] = rest
    elif key == "adjacency":
        try:
            meta[key] = adjacency(rest, 2)
        except ValueError as exc:
            raise ParseError(str(exc), lineno, 12) from None
    elif key == "curve":
        pts, col = [], 8
        for tok in rest.split():
            pts.append(_parse_pair(tok, lineno, col))
            col += len(tok) + 1
        meta[key] = tuple(pts)
    else:
        raise ParseError(f"unknown header @{key}", lineno, 1)


def parse_grid(text: str) -> ImageDocument:
    meta, rows = {}, []
    for lineno, raw in enumerate(text.splitlines(), 1):
        raw = raw.rstrip()
        if not raw:
            continue
        if raw.startswith("@"):
            if rows:
                raise ParseError("header after grid rows", lineno, 1)
            _parse_header(raw, lineno, meta)
            continue
        for col, ch in enumerate(raw, 1):
            if ch not in (MEMBER, EMPTY):
                raise ParseError(f"unknown character {ch!r}", lineno, col)
        if rows and len(raw) != len(rows[0][1]):
            raise ParseError(f"ragged grid: row has {len(raw)} cells, expected {len(rows[0][1])}",
                             lineno, min(len(raw), len(rows[0][1])) + 1)
        rows.append((lineno, raw))
    ox, oy = meta.get("origin", (0, 0))
    pts = []
    for r, (_, row) in enumerate(rows):
        y = oy + len(rows) - 1 - r
        pts.extend((ox + c, y) for c, ch in enumerate(row) if ch == MEMBER)
    return ImageDocument(DigitalImage(tuple(pts), 2), meta.get("adjacency"), meta.get("curve"),
                         meta.get("name"), "grid")


def parse_structured(text: str) -> ImageDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "points" not in data:
        raise ParseError("structured document must be an object with a 'points' list")
    unknown = set(data) - {"name", "adjacency", "points", "curve"}
    if unknown:
        raise ParseError(f"unknown fields {sorted(unknown)}")
    try:
        pts = [tuple(int(c) for c in p) for p in data["points"]]
    except (TypeError, ValueError):
        raise ParseError("points must be a list of integer lists") from None
    seen = set()
    for i, p in enumerate(pts):
        if p in seen:
            raise ParseError(f"duplicate point {list(p)} at index {i}")
        seen.add(p)
    dims = {len(p) for p in pts}
    if len(dims) > 1:
        raise ParseError(f"mixed dimensions {sorted(dims)}")
    dim = dims.pop() if dims else 2
    adj = adjacency(data["adjacency"], dim) if data.get("adjacency") else None
    curve = tuple(tuple(int(c) for c in p) for p in data["curve"]) if data.get("curve") else None
    return ImageDocument(DigitalImage(tuple(pts), dim), adj, curve, data.get("name"), "structured")


def parse_image(text: str) -> ImageDocument:
    if text.lstrip().startswith("{"):
        return parse_structured(text)
    return parse_grid(text)


def read_image(path) -> ImageDocument:
    with open(path, encoding="utf-8") as fh:
        return parse_image(fh.read())


def emit_grid(doc: ImageDocument) -> str:
    if doc.image.dimension != 2:
        raise ValueError("grid format holds planar images only")
    lines = []
    if doc.name:
        lines.append(f"@name {doc.name}")
    if doc.adjacency:
        lines.append(f"@adjacency {doc.adjacency.name}")
    if doc.curve:
        lines.append("@curve " + " ".join(f"{x},{y}" for x, y in doc.curve))
    if len(doc.image):
        (x0, y0), (x1, y1) = doc.image.bounds()
        lines.append(f"@origin {x0} {y0}")
        for y in range(y1, y0 - 1, -1):
            lines.append("".join(MEMBER if (x, y) in doc.image else EMPTY for x in range(x0, x1 + 1)))
    return "\n".join(lines) + "\n"


def emit_structured(doc: ImageDocument) -> str:
    data = {}
    if doc.name:
        data["name"] = doc.name
    if doc.adjacency:
        data["adjacency"] = doc.adjacency.name
    data["points"] = [list(p) for p in doc.image]
    if doc.curve:
        data["curve"] = [list(p) for p in doc.curve]
    return json.dumps(data) + "\n"


def emit(doc: ImageDocument, fmt: str | None = None) -> str:
    fmt = fmt or doc.source
    if fmt == "grid":
        return emit_grid(doc)
    if fmt == "structured":
        return emit_structured(doc)
    raise ValueError(f"unknown format {fmt!r}")
