"""Tile shapes and their placements.

Only translations are allowed, so every tile kind is a single fixed set of
``(drow, dcol)`` offsets measured from the NW corner of its bounding box.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from ribbontile.geometry import Cell, Region


class TileKind(enum.IntEnum):
    T1 = 1
    T2 = 2
    T3 = 3
    T4 = 4
    T5 = 5

    @property
    def offsets(self) -> tuple:
        return _OFFSETS[self]

    @property
    def label(self) -> str:
        return self.name

    @classmethod
    def from_label(cls, label: str) -> "TileKind":
        try:
            return cls[label]
        except KeyError:
            raise ValueError(f"unknown tile kind {label!r}") from None


# Ribbon shapes, each an East/South path with one turn: SSE, ESS, SEE, EES.
_OFFSETS = {
    TileKind.T1: ((0, 0), (1, 0), (2, 0), (2, 1)),
    TileKind.T2: ((0, 0), (0, 1), (1, 1), (2, 1)),
    TileKind.T3: ((0, 0), (1, 0), (1, 1), (1, 2)),
    TileKind.T4: ((0, 0), (0, 1), (0, 2), (1, 2)),
    TileKind.T5: ((0, 0), (0, 1), (1, 0), (1, 1)),
}


class TileSet(enum.Enum):
    RIBBON_T4 = "t4"
    RIBBON_T4_PLUS = "t4plus"
    RECT_ONLY = "rect"

    @property
    def kinds(self) -> tuple:
        if self is TileSet.RIBBON_T4:
            return (TileKind.T1, TileKind.T2, TileKind.T3, TileKind.T4)
        if self is TileSet.RIBBON_T4_PLUS:
            return tuple(TileKind)
        return ()

    @classmethod
    def parse(cls, name) -> "TileSet":
        if isinstance(name, TileSet):
            return name
        aliases = {"t4": cls.RIBBON_T4, "t4plus": cls.RIBBON_T4_PLUS, "t4+": cls.RIBBON_T4_PLUS, "rect": cls.RECT_ONLY}
        try:
            return aliases[str(name).lower()]
        except KeyError:
            raise ValueError(f"unknown tile set {name!r}") from None


@dataclass(frozen=True, order=True)
class Placement:
    """A tile kind anchored at the NW corner of its bounding box.

    Field order makes the natural ordering (anchor row, anchor col, kind).
    """

    anchor: Cell
    kind: TileKind

    def __post_init__(self):
        if type(self.anchor) is not Cell:
            object.__setattr__(self, "anchor", Cell(*self.anchor))
        if type(self.kind) is not TileKind:
            object.__setattr__(self, "kind", TileKind(self.kind))

    @property
    def cells(self) -> frozenset:
        return tile_cells(self.kind, self.anchor)

    def to_json(self) -> dict:
        return {"kind": self.kind.label, "anchor": [self.anchor.row, self.anchor.col]}

    @classmethod
    def from_json(cls, obj: dict) -> "Placement":
        return cls(Cell(*obj["anchor"]), TileKind.from_label(obj["kind"]))


@lru_cache(maxsize=None)
def _tile_cells(kind: TileKind, r: int, c: int) -> frozenset:
    return frozenset(Cell(r + dr, c + dc) for dr, dc in kind.offsets)


def tile_cells(kind: TileKind, anchor) -> frozenset:
    r, c = anchor
    if type(kind) is TileKind:
        return _tile_cells(kind, r, c)
    return frozenset(Cell(r + dr, c + dc) for dr, dc in TileKind(kind).offsets)


def is_ribbon(kind: TileKind) -> bool:
    return TileKind(kind) is not TileKind.T5


def placements_in(region: Region, tileset) -> list:
    """All placements of the set's kinds that fit inside ``region``.

    Ordered by anchor row, anchor column, then kind.
    """
    tileset = TileSet.parse(tileset)
    if tileset is TileSet.RECT_ONLY:
        raise ValueError("rectangle macro-pieces are produced by macro_pieces_in")
    out = []
    for anchor in sorted(region.cells):
        for kind in tileset.kinds:
            if tile_cells(kind, anchor) <= region.cells:
                out.append(Placement(anchor, kind))
    return out


def ribbon_paths() -> set:
    """Offset sets of every 4-cell East/South lattice path with a single turn."""
    steps = {"E": (0, 1), "S": (1, 0)}
    out = set()
    for a in "ES":
        for b in "ES":
            for c in "ES":
                word = a + b + c
                turns = sum(1 for x, y in zip(word, word[1:]) if x != y)
                if turns != 1:
                    continue
                r = col = 0
                cells = [(0, 0)]
                for ch in word:
                    dr, dc = steps[ch]
                    r, col = r + dr, col + dc
                    cells.append((r, col))
                out.add(frozenset(cells))
    return out


@dataclass(frozen=True, order=True)
class MacroPiece:
    """A 2x4 (``H``), 4x2 (``V``) or 2x2 (``S``) block with its fixed tiling."""

    origin: Cell
    shape: str

    def __post_init__(self):
        if type(self.origin) is not Cell:
            object.__setattr__(self, "origin", Cell(*self.origin))

    @property
    def size(self) -> tuple:
        return {"H": (2, 4), "V": (4, 2), "S": (2, 2)}[self.shape]

    @property
    def cells(self) -> frozenset:
        r, c = self.origin
        h, w = self.size
        return frozenset(Cell(r + i, c + j) for i in range(h) for j in range(w))

    @property
    def placements(self) -> tuple:
        return _macro_placements(self.origin, self.shape)

    @property
    def two_squares(self) -> tuple:
        """Origins of the 2x2 squares the block is made of."""
        r, c = self.origin
        if self.shape == "H":
            return (Cell(r, c), Cell(r, c + 2))
        if self.shape == "V":
            return (Cell(r, c), Cell(r + 2, c))
        return (Cell(r, c),)


@lru_cache(maxsize=None)
def _macro_placements(origin, shape) -> tuple:
    r, c = origin
    if shape == "H":
        return (Placement(Cell(r, c), TileKind.T3), Placement(Cell(r, c + 1), TileKind.T4))
    if shape == "V":
        return (Placement(Cell(r, c), TileKind.T2), Placement(Cell(r + 1, c), TileKind.T1))
    return (Placement(Cell(r, c), TileKind.T5),)


def macro_pieces_in(region: Region, with_square: bool = False) -> list:
    shapes = ("H", "V", "S") if with_square else ("H", "V")
    out = []
    for origin in sorted(region.cells):
        for shape in shapes:
            piece = MacroPiece(origin, shape)
            if piece.cells <= region.cells:
                out.append(piece)
    return out
