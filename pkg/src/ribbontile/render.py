"""ASCII and SVG pictures of a tiled region."""

from __future__ import annotations

import string
from typing import Optional
from xml.sax.saxutils import escape

from ribbontile.geometry import Region
from ribbontile.solver import Tiling

# X marks the missing cell, so it is never a tile letter
_LETTERS = [ch for ch in string.ascii_letters + string.digits if ch not in "Xx"]

PALETTE = {
    "regular": "#e8eef6",
    "crack": "#9a9a9a",
    "missing": "#262626",
    "stroke": "#333333",
    "grid": "#cccccc",
}


def _owner_map(tiling: Tiling) -> dict:
    owner = {}
    for i, p in enumerate(tiling.placements):
        for cell in p.cells:
            owner[tuple(cell)] = i
    return owner


def render_ascii(region: Region, tiling: Optional[Tiling] = None) -> str:
    """One line per row: a letter per tile, ``X`` for the missing cell, ``.`` off-region."""
    owner = _owner_map(tiling) if tiling is not None else {}
    lines = []
    for r in range(region.height):
        row = []
        for c in range(region.width):
            if region.missing is not None and (r, c) == tuple(region.missing):
                row.append("X")
            elif (r, c) in owner:
                row.append(_LETTERS[owner[(r, c)] % len(_LETTERS)])
            elif (r, c) in region.cells:
                row.append("#")
            else:
                row.append(".")
        lines.append("".join(row))
    return "\n".join(lines) + "\n"


def _outline(cells: set, unit: int) -> list:
    """Boundary segments of a cell set, as ``(x1, y1, x2, y2)``."""
    segs = []
    for r, c in sorted(cells):
        x, y = c * unit, r * unit
        if (r - 1, c) not in cells:
            segs.append((x, y, x + unit, y))
        if (r + 1, c) not in cells:
            segs.append((x, y + unit, x + unit, y + unit))
        if (r, c - 1) not in cells:
            segs.append((x, y, x, y + unit))
        if (r, c + 1) not in cells:
            segs.append((x + unit, y, x + unit, y + unit))
    return segs


def render_svg(region: Region, tiling: Optional[Tiling] = None, crack: frozenset = frozenset(), unit: int = 20, title: str = "") -> str:
    """SVG 1.1 drawing; tiles covering any cell of ``crack`` are shaded."""
    w, h = region.width * unit, region.height * unit
    crack = {tuple(c) for c in crack}
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{w + 2}" height="{h + 2}" viewBox="-1 -1 {w + 2} {h + 2}">',
    ]
    if title:
        out.append(f"<title>{escape(title)}</title>")
    for r, c in sorted(region.cells):
        out.append(
            f'<rect x="{c * unit}" y="{r * unit}" width="{unit}" height="{unit}" '
            f'fill="{PALETTE["regular"]}" stroke="{PALETTE["grid"]}" stroke-width="0.5"/>'
        )
    if tiling is not None:
        for p in tiling.placements:
            cells = {tuple(x) for x in p.cells}
            if cells & crack:
                for r, c in sorted(cells):
                    out.append(
                        f'<rect x="{c * unit}" y="{r * unit}" width="{unit}" height="{unit}" fill="{PALETTE["crack"]}"/>'
                    )
            path = " ".join(f"M{x1} {y1}L{x2} {y2}" for x1, y1, x2, y2 in _outline(cells, unit))
            out.append(
                f'<path d="{path}" fill="none" stroke="{PALETTE["stroke"]}" stroke-width="2" '
                f'stroke-linecap="square" data-tile="{p.kind.label}"/>'
            )
    if region.missing is not None:
        r, c = region.missing
        out.append(
            f'<rect x="{c * unit}" y="{r * unit}" width="{unit}" height="{unit}" fill="{PALETTE["missing"]}"/>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"
