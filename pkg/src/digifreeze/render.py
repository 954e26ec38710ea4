"""Plain-text and SVG pictures of planar images with optional overlays.

Output is a pure function of the inputs: points are visited in sorted order
and all SVG coordinates are integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .grid import DigitalImage, Point
from .rigidity import SelfMap

CELL = 24
RESERVED = ("#", ".", "o", "+")  # member, non-member, curve, boundary


class RenderError(ValueError):
    pass


@dataclass
class Overlays:
    boundary: Sequence[Point] = ()
    curve: Sequence[Point] = ()
    candidate: Sequence[Point] = ()
    label: str = "a"
    witness: SelfMap | dict | None = None

    def moved(self) -> dict[Point, Point]:
        if self.witness is None:
            return {}
        if isinstance(self.witness, SelfMap):
            return self.witness.moved()
        return {tuple(p): tuple(q) for p, q in self.witness.items() if tuple(p) != tuple(q)}


def _check(image: DigitalImage, overlays: Overlays):
    if image.dimension != 2:
        raise RenderError("only planar images can be drawn")
    for name in ("boundary", "curve", "candidate"):
        for p in getattr(overlays, name):
            if tuple(p) not in image:
                raise RenderError(f"{name} point {tuple(p)} is not in the image")
    for p, q in overlays.moved().items():
        if p not in image or q not in image:
            raise RenderError(f"witness arrow {p} -> {q} leaves the image")
    if len(overlays.label) != 1 or overlays.label in RESERVED:
        raise RenderError(f"candidate label must be one character other than {' '.join(RESERVED)}")


def _extent(image: DigitalImage):
    if not len(image):
        return (0, 0), (-1, -1)
    return image.bounds()


def render_ascii(image: DigitalImage, overlays: Overlays | None = None) -> str:
    """One glyph per cell, top row first, followed by a legend."""
    ov = overlays or Overlays()
    _check(image, ov)
    moved = ov.moved()
    cand, curve, bd = set(map(tuple, ov.candidate)), set(map(tuple, ov.curve)), set(map(tuple, ov.boundary))
    glyphs = {"#": "member", ".": "not a member"}
    used = set()

    def glyph(p):
        if p not in image:
            return "."
        for g, group in ((ov.label, cand), ("o", curve), ("+", bd)):
            if p in group:
                used.add(g)
                return g
        used.add("#")
        return "#"

    (x0, y0), (x1, y1) = _extent(image)
    rows = ["".join(glyph((x, y)) for x in range(x0, x1 + 1)) for y in range(y1, y0 - 1, -1)]
    legend = [f"origin ({x0},{y0}) at bottom left"] if len(image) else ["empty image"]
    names = {ov.label: "candidate set", "o": "curve", "+": "boundary"}
    for g in (ov.label, "o", "+"):
        if g in used:
            legend.append(f"{g}  {names[g]}")
    for g in ("#", "."):
        legend.append(f"{g}  {glyphs[g]}")
    for p, q in sorted(moved.items()):
        legend.append(f"{p} -> {q}")
    return "\n".join(rows + [""] + legend) + "\n"


def _centre(p, x0, y1):
    return CELL * (p[0] - x0) + CELL // 2 + CELL, CELL * (y1 - p[1]) + CELL // 2 + CELL


def render_svg(image: DigitalImage, overlays: Overlays | None = None) -> str:
    ov = overlays or Overlays()
    _check(image, ov)
    (x0, y0), (x1, y1) = _extent(image)
    w, h = CELL * (x1 - x0 + 3), CELL * (y1 - y0 + 3)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
           '<defs><marker id="arrow" markerWidth="8" markerHeight="8" refX="7" refY="4" orient="auto">'
           '<path d="M0,0 L8,4 L0,8 z" fill="#c00"/></marker></defs>',
           f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>']
    bd = set(map(tuple, ov.boundary))
    for p in image:
        cx, cy = _centre(p, x0, y1)
        fill = "#bbbbbb" if p in bd else "#e6e6e6"
        out.append(f'<rect x="{cx - CELL // 2}" y="{cy - CELL // 2}" width="{CELL}" height="{CELL}" '
                   f'fill="{fill}" stroke="#888" stroke-width="1"/>')
    curve = [tuple(p) for p in ov.curve]
    if curve:
        pts = " ".join("{},{}".format(*_centre(p, x0, y1)) for p in curve)
        out.append(f'<polygon points="{pts}" fill="none" stroke="black" stroke-width="3"/>')
    for p in sorted(set(map(tuple, ov.candidate))):
        cx, cy = _centre(p, x0, y1)
        out.append(f'<text x="{cx}" y="{cy + 5}" font-family="serif" font-size="16" font-style="italic" '
                   f'text-anchor="middle">{ov.label}</text>')
    for p, q in sorted(ov.moved().items()):
        (ax, ay), (bx, by) = _centre(p, x0, y1), _centre(q, x0, y1)
        out.append(f'<line x1="{ax}" y1="{ay}" x2="{bx}" y2="{by}" stroke="#c00" stroke-width="2" '
                   f'marker-end="url(#arrow)"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def render(image: DigitalImage, overlays: Overlays | None = None, fmt: str = "ascii") -> str:
    if fmt == "ascii":
        return render_ascii(image, overlays)
    if fmt == "svg":
        return render_svg(image, overlays)
    raise RenderError(f"unknown format {fmt!r}")


def witness_arrows(f: SelfMap | dict) -> list[tuple[Point, Point]]:
    return sorted(Overlays(witness=f).moved().items())

