"""Rectangular pattern, crack extraction and crack census.

A block is *regular* when it sits on the 2-square grid of one of the two
staircases of the region: the SW staircase is anchored at the SW corner of
the box and the NE staircase at the NE corner. With rows counted downward
that means a SW ("lower") block has its NW cell at a row of the same parity
as the box height and an even column, and a NE ("upper") block has an even
row and a column of the same parity as the box width. For odd squares the
two grids are disjoint: lower = (odd, even), upper = (even, odd).
"""

from __future__ import annotations

import enum
import json
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Optional

from ribbontile.geometry import (
    Cell,
    Region,
    SquareKind,
    central_windows,
    classify_side,
    components4,
    window_support,
)
from ribbontile.solver import Tiling, enumerate_tilings, validate_tiling
from ribbontile.tiles import MacroPiece, TileKind, TileSet


class StructureError(ValueError):
    pass


class InvalidTiling(StructureError):
    pass


class AmbiguousDecomposition(StructureError):
    pass


class NotDeficientSquare(StructureError):
    pass


class Side(enum.Enum):
    LOWER = "lower"
    UPPER = "upper"
    MISSING_CENTER = "missing-center"
    NONE = "none"


def lower_aligned(region: Region, origin) -> bool:
    r, c = origin
    return (r - region.height) % 2 == 0 and c % 2 == 0


def upper_aligned(region: Region, origin) -> bool:
    r, c = origin
    return r % 2 == 0 and (c - region.width) % 2 == 0


def block_side(region: Region, origin) -> Optional[Side]:
    if lower_aligned(region, origin):
        return Side.LOWER
    if upper_aligned(region, origin):
        return Side.UPPER
    return None


@dataclass(frozen=True)
class Block:
    piece: MacroPiece
    side: Side

    @property
    def origin(self) -> Cell:
        return self.piece.origin

    @property
    def orientation(self) -> str:
        return self.piece.shape

    @property
    def placements(self) -> tuple:
        return self.piece.placements


@dataclass(frozen=True)
class Decomposition:
    rect_blocks: tuple
    square_blocks: tuple
    irregular: tuple

    @property
    def blocks(self) -> tuple:
        return self.rect_blocks + self.square_blocks


def _candidate_blocks(region: Region, placements) -> list:
    present = set(placements)
    out = []
    for p in placements:
        r, c = p.anchor
        if p.kind is TileKind.T3:
            piece = MacroPiece(Cell(r, c), "H")
        elif p.kind is TileKind.T2:
            piece = MacroPiece(Cell(r, c), "V")
        elif p.kind is TileKind.T5:
            piece = MacroPiece(Cell(r, c), "S")
        else:
            continue
        if not all(q in present for q in piece.placements):
            continue
        side = block_side(region, piece.origin)
        if side is not None:
            out.append(Block(piece, side))
    return out


def decompose(region: Region, tiling: Tiling, check: bool = True) -> Decomposition:
    """Split a tiling into regular blocks and irregular placements.

    Each L placement can complete at most one 2x4/4x2 box (a T3 only with
    the T4 one column to its right, a T2 only with the T1 one row below),
    so candidate blocks never share a placement; the check below guards
    that argument rather than choosing between overlapping blocks.
    ``check=False`` skips re-validating a tiling already known to be exact.
    """
    if check and validate_tiling(region, tiling):
        raise InvalidTiling("tiling is not an exact cover of the region")
    blocks = _candidate_blocks(region, tiling.placements)
    owner: dict = {}
    for b in blocks:
        for p in b.placements:
            if p in owner:
                raise AmbiguousDecomposition(
                    f"placement {p} lies in blocks at {owner[p].origin} and {b.origin}"
                )
            owner[p] = b
    irregular = tuple(p for p in tiling.placements if p not in owner)
    rects = tuple(b for b in blocks if b.orientation in ("H", "V"))
    squares = tuple(b for b in blocks if b.orientation == "S")
    return Decomposition(rects, squares, irregular)


@dataclass(frozen=True)
class CrackReport:
    side: int
    missing: Cell
    crack_cells: frozenset
    irregular: tuple
    components: tuple
    window_occupancy: tuple

    @property
    def irregular_count(self) -> int:
        return len(self.irregular)


def extract_crack(region: Region, tiling: Tiling, decomposition: Optional[Decomposition] = None) -> CrackReport:
    if not region.is_deficient_square or region.width % 2 == 0:
        raise NotDeficientSquare("crack analysis needs an odd deficient square")
    dec = decomposition or decompose(region, tiling)
    crack = {region.missing}
    for p in dec.irregular:
        crack |= p.cells
    comps = components4(region.cells - crack)

    lower_squares = set()
    upper_squares = set()
    for b in dec.blocks:
        target = lower_squares if b.side is Side.LOWER else upper_squares
        target.update(b.piece.two_squares)
    occupancy = []
    for w in central_windows(region.width):
        k = w.index
        if (2 * k + 1, 2 * k) in lower_squares:
            occupancy.append(Side.LOWER)
        elif (2 * k, 2 * k + 1) in upper_squares:
            occupancy.append(Side.UPPER)
        elif region.missing == w.center:
            occupancy.append(Side.MISSING_CENTER)
        else:
            occupancy.append(Side.NONE)
    return CrackReport(
        side=region.width,
        missing=region.missing,
        crack_cells=frozenset(crack),
        irregular=dec.irregular,
        components=tuple(comps),
        window_occupancy=tuple(occupancy),
    )


@dataclass
class CrackVerdict:
    location_ok: bool
    endpoints_ok: bool
    count_ok: bool
    equal_area_ok: bool
    two_components_ok: bool
    equal_area_asserted: bool = True
    diagnostics: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        flags = [self.location_ok, self.endpoints_ok, self.count_ok, self.two_components_ok]
        if self.equal_area_asserted:
            flags.append(self.equal_area_ok)
        return all(flags)

    def flags(self) -> dict:
        return {
            "location_ok": self.location_ok,
            "endpoints_ok": self.endpoints_ok,
            "count_ok": self.count_ok,
            "equal_area_ok": self.equal_area_ok,
            "two_components_ok": self.two_components_ok,
        }


def expected_irregular_count(side: int) -> int:
    n = (side - 1) // 2
    return n + 1 if side % 4 == 3 else n


def validate_crack(report: CrackReport, side: int, tileset=TileSet.RIBBON_T4) -> CrackVerdict:
    tileset = TileSet.parse(tileset)
    diag = []
    support = window_support(side)
    outside = sorted(report.crack_cells - support)
    if outside:
        diag.append(f"crack cells outside central windows: {[tuple(c) for c in outside]}")
    corners = {(0, 0), (side - 1, side - 1)}
    endpoints_ok = corners <= (report.crack_cells | {report.missing})
    if not endpoints_ok:
        diag.append("crack does not reach both diagonal corners")
    want = expected_irregular_count(side)
    if report.irregular_count != want:
        diag.append(f"irregular tiles: {report.irregular_count}, expected {want}")
    sizes = [len(c) for c in report.components]
    two = len(sizes) == 2
    if not two:
        diag.append(f"complement has {len(sizes)} components")
    equal = two and sizes[0] == sizes[1]
    if two and not equal:
        diag.append(f"component areas {sizes[0]} and {sizes[1]}")
    return CrackVerdict(
        location_ok=not outside,
        endpoints_ok=endpoints_ok,
        count_ok=report.irregular_count == want,
        equal_area_ok=equal,
        two_components_ok=two,
        equal_area_asserted=tileset is TileSet.RIBBON_T4,
        diagnostics=diag,
    )


def window_balance(report: CrackReport) -> dict:
    counts = {s: 0 for s in Side}
    for s in report.window_occupancy:
        counts[s] += 1
    return counts


@dataclass
class CensusReport:
    distinct_cracks: int
    weighted_cracks: int
    per_crack_tilings: dict
    per_crack_fillings: dict

    def to_json(self) -> dict:
        cracks = []
        for cells in sorted(self.per_crack_tilings, key=lambda s: sorted(s)):
            cracks.append(
                {
                    "cells": [list(c) for c in sorted(cells)],
                    "tilings": self.per_crack_tilings[cells],
                }
            )
        return {
            "distinct_cracks": self.distinct_cracks,
            "weighted_cracks": self.weighted_cracks,
            "cracks": cracks,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))


def crack_census(region: Region, tileset) -> CensusReport:
    """Group every tiling by its crack cell set.

    A crack counts once per distinct set of irregular placements that fills
    it, so a crack admitting two fillings is counted twice.
    """
    if not region.is_deficient_square:
        raise NotDeficientSquare("crack census needs a deficient square")
    tilings: dict = defaultdict(int)
    fillings: dict = defaultdict(set)
    for t in enumerate_tilings(region, tileset):
        dec = decompose(region, t, check=False)
        crack = {region.missing}
        for p in dec.irregular:
            crack |= p.cells
        key = frozenset(crack)
        tilings[key] += 1
        fillings[key].add(dec.irregular)
    return CensusReport(
        distinct_cracks=len(tilings),
        weighted_cracks=sum(len(v) for v in fillings.values()),
        per_crack_tilings=dict(tilings),
        per_crack_fillings={k: len(v) for k, v in fillings.items()},
    )


def square_class_m(side: int) -> int:
    sc = classify_side(side)
    if sc.kind is SquareKind.NOT_ODD_SQUARE:
        raise NotDeficientSquare(f"side {side} is not odd")
    return sc.m
