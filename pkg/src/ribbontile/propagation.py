"""Grow a tiled deficient square by four, extending its crack.

The old square keeps its NW corner. The old crack ends in the cell
``(2n, 2n)``; window ``n`` takes its SW 2-square and window ``n + 1`` its NE
2-square, which leaves exactly one L tile in each window for the crack:
a T2 at ``(2n, 2n + 1)`` and a T3 at ``(2n + 3, 2n + 2)``. The rest of the
new band is covered by 2x4/4x2 blocks on the grid of the staircase whose
side of the crack they fall on.
"""

from __future__ import annotations

from dataclasses import dataclass

from ribbontile.geometry import Cell, Region, components4, make_deficient_square
from ribbontile.solver import Tiling, validate_tiling
from ribbontile.structure import (
    Side,
    block_side,
    decompose,
    extract_crack,
    validate_crack,
)
from ribbontile.tiles import Placement, TileKind, TileSet, macro_pieces_in


class PropagationError(ValueError):
    pass


class InputCrackInvalid(PropagationError):
    pass


class BandFillFailed(PropagationError):
    pass


@dataclass(frozen=True)
class FramePlan:
    old_side: int
    new_side: int
    band_cells: frozenset
    crack_extension: tuple
    window_sides: tuple

    @classmethod
    def for_side(cls, old_side: int) -> "FramePlan":
        n = (old_side - 1) // 2
        new_side = old_side + 4
        band = frozenset(
            Cell(r, c)
            for r in range(new_side)
            for c in range(new_side)
            if r >= old_side or c >= old_side
        )
        ext = (
            Placement(Cell(2 * n, 2 * n + 1), TileKind.T2),
            Placement(Cell(2 * n + 3, 2 * n + 2), TileKind.T3),
        )
        return cls(old_side, new_side, band, ext, ((n, Side.LOWER), (n + 1, Side.UPPER)))


def _exact_cover_first(cells: frozenset, pieces: list):
    """First exact cover of ``cells`` by ``pieces`` (branching on the least cell)."""
    by_cell: dict = {}
    for piece in pieces:
        for cell in piece.cells:
            by_cell.setdefault(cell, []).append(piece)
    for opts in by_cell.values():
        opts.sort()

    def search(remaining: frozenset, chosen: list):
        if not remaining:
            return list(chosen)
        cell = min(remaining)
        for piece in by_cell.get(cell, ()):
            pc = piece.cells
            if pc <= remaining:
                chosen.append(piece)
                found = search(remaining - pc, chosen)
                if found is not None:
                    return found
                chosen.pop()
        return None

    return search(frozenset(cells), [])


def propagate(region: Region, tiling: Tiling, tileset=TileSet.RIBBON_T4):
    """Embed ``tiling`` in the NW corner of a deficient square four cells larger."""
    tileset = TileSet.parse(tileset)
    side = region.width
    if not region.is_deficient_square or side % 2 == 0 or side < 3:
        raise InputCrackInvalid("propagation starts from an odd deficient square")
    if validate_tiling(region, tiling):
        raise InputCrackInvalid("input is not a tiling of the region")
    report = extract_crack(region, tiling)
    verdict = validate_crack(report, side, tileset)
    if not verdict.ok:
        raise InputCrackInvalid("; ".join(verdict.diagnostics))

    plan = FramePlan.for_side(side)
    new_region = make_deficient_square(plan.new_side, region.missing)
    crack = set(report.crack_cells)
    for p in plan.crack_extension:
        crack |= p.cells
    halves = components4(new_region.cells - crack)
    if len(halves) != 2:
        raise BandFillFailed(f"extended crack leaves {len(halves)} regions")
    lower = next(h for h in halves if (plan.new_side - 1, 0) in h)
    upper = next(h for h in halves if (0, plan.new_side - 1) in h)

    free = plan.band_cells - crack
    pieces = []
    for piece in macro_pieces_in(Region(plan.new_side, plan.new_side, free), tileset is TileSet.RIBBON_T4_PLUS):
        side_of = block_side(new_region, piece.origin)
        home = lower if side_of is Side.LOWER else upper if side_of is Side.UPPER else None
        if home is not None and piece.cells <= home:
            pieces.append(piece)
    # rectangles before 2x2 squares so a T4+ band is filled like a T4 one
    pieces.sort(key=lambda p: (p.shape == "S", p))
    cover = _exact_cover_first(free, pieces)
    if cover is None:
        raise BandFillFailed(f"no block filling of the band around side {side}")

    placements = list(tiling.placements) + list(plan.crack_extension)
    for piece in cover:
        placements.extend(piece.placements)
    out = Tiling(tuple(placements))
    if validate_tiling(new_region, out):
        raise BandFillFailed("propagated placements do not tile the larger square")
    return new_region, out


def propagation_checks(region: Region, tiling: Tiling, new_region: Region, new_tiling: Tiling, tileset=TileSet.RIBBON_T4) -> list:
    """Problems with a propagation result; empty when it is sound."""
    problems = []
    if validate_tiling(new_region, new_tiling):
        problems.append("output is not a tiling")
        return problems
    if not set(tiling.placements) <= set(new_tiling.placements):
        problems.append("input placements not preserved")
    old = extract_crack(region, tiling)
    new = extract_crack(new_region, new_tiling)
    verdict = validate_crack(new, new_region.width, tileset)
    if not verdict.ok:
        problems.extend(verdict.diagnostics)
    box = {c for c in new.crack_cells if c[0] < region.width and c[1] < region.width}
    if box != set(old.crack_cells):
        problems.append("crack restricted to the old square changed")
    if new.irregular_count != old.irregular_count + 2:
        problems.append(f"irregular tiles went from {old.irregular_count} to {new.irregular_count}")
    if new_region.missing != region.missing:
        problems.append("missing cell moved")
    dec = decompose(new_region, new_tiling)
    if len(dec.irregular) != new.irregular_count:
        problems.append("decomposition changed between checks")
    return problems
