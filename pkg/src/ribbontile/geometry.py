"""Cells, regions and the diagonal bookkeeping of odd squares.

Rows grow southward and columns eastward, so the NW-SE diagonal of a
square is exactly the set of cells with ``row == col``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, NamedTuple, Optional


class GeometryError(ValueError):
    pass


class EvenSide(GeometryError):
    pass


class MissingOutOfBounds(GeometryError):
    pass


class RegionSyntaxError(GeometryError):
    pass


class MultipleMissing(RegionSyntaxError):
    pass


class Cell(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True)
class Region:
    """A finite set of lattice cells inside a ``height x width`` box.

    ``missing`` is the designated removed cell of a deficient rectangle; it
    is never part of ``cells``.
    """

    width: int
    height: int
    cells: frozenset = field(default_factory=frozenset)
    missing: Optional[Cell] = None

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise GeometryError(f"box must be at least 1x1, got {self.height}x{self.width}")
        cells = frozenset(Cell(*c) for c in self.cells)
        object.__setattr__(self, "cells", cells)
        for c in cells:
            if not self.in_box(c):
                raise GeometryError(f"cell {tuple(c)} outside {self.height}x{self.width} box")
        if self.missing is not None:
            missing = Cell(*self.missing)
            object.__setattr__(self, "missing", missing)
            if not self.in_box(missing):
                raise MissingOutOfBounds(f"missing cell {tuple(missing)} outside box")
            if missing in cells:
                raise GeometryError(f"missing cell {tuple(missing)} is also a region cell")

    def in_box(self, cell) -> bool:
        r, c = cell
        return 0 <= r < self.height and 0 <= c < self.width

    def __len__(self):
        return len(self.cells)

    def __contains__(self, cell):
        return cell in self.cells

    @property
    def is_square(self) -> bool:
        return self.width == self.height

    @property
    def is_deficient_square(self) -> bool:
        return (
            self.is_square
            and self.missing is not None
            and len(self.cells) == self.width * self.height - 1
        )

    @classmethod
    def full(cls, height: int, width: int) -> "Region":
        cells = frozenset(Cell(r, c) for r in range(height) for c in range(width))
        return cls(width=width, height=height, cells=cells)

    @classmethod
    def deficient_rectangle(cls, height: int, width: int, missing) -> "Region":
        missing = Cell(*missing)
        if not (0 <= missing.row < height and 0 <= missing.col < width):
            raise MissingOutOfBounds(f"missing cell {tuple(missing)} outside {height}x{width} box")
        cells = frozenset(
            Cell(r, c) for r in range(height) for c in range(width) if (r, c) != missing
        )
        return cls(width=width, height=height, cells=cells, missing=missing)


class SquareKind(enum.Enum):
    FOUR_M_PLUS_ONE = "4m+1"
    FOUR_M_PLUS_THREE = "4m+3"
    NOT_ODD_SQUARE = "not-odd"


@dataclass(frozen=True)
class SquareClass:
    kind: SquareKind
    m: int


@dataclass(frozen=True)
class CentralWindow:
    """3x3 window centred on the diagonal; window ``k`` starts at ``(2k, 2k)``."""

    index: int
    span: int = 3

    @property
    def origin(self) -> Cell:
        return Cell(2 * self.index, 2 * self.index)

    @property
    def center(self) -> Cell:
        return Cell(2 * self.index + 1, 2 * self.index + 1)

    @property
    def cells(self) -> frozenset:
        r0, c0 = self.origin
        return frozenset(
            Cell(r0 + dr, c0 + dc) for dr in range(self.span) for dc in range(self.span)
        )


def make_deficient_square(side: int, missing) -> Region:
    if side % 2 == 0:
        raise EvenSide(f"side must be odd, got {side}")
    if side < 3:
        raise GeometryError(f"side must be at least 3, got {side}")
    return Region.deficient_rectangle(side, side, missing)


def classify_side(side: int) -> SquareClass:
    if side % 4 == 1:
        return SquareClass(SquareKind.FOUR_M_PLUS_ONE, (side - 1) // 4)
    if side % 4 == 3:
        return SquareClass(SquareKind.FOUR_M_PLUS_THREE, (side - 3) // 4)
    return SquareClass(SquareKind.NOT_ODD_SQUARE, 0)


def diagonal_position(side: int, cell) -> Optional[int]:
    """1-indexed position of ``cell`` on the NW-SE diagonal, or None."""
    r, c = cell
    if not (0 <= r < side and 0 <= c < side):
        raise MissingOutOfBounds(f"cell {(r, c)} outside {side}x{side} square")
    return r + 1 if r == c else None


def diagonal_cell(position: int) -> Cell:
    return Cell(position - 1, position - 1)


def admissible_positions(side: int) -> list:
    """Diagonal positions where a missing cell can leave a tilable square."""
    kind = classify_side(side).kind
    if kind is SquareKind.FOUR_M_PLUS_ONE:
        return list(range(1, side + 1, 2))
    if kind is SquareKind.FOUR_M_PLUS_THREE:
        return list(range(2, side + 1, 2))
    return []


def central_windows(side: int) -> list:
    if side % 2 == 0:
        raise EvenSide(f"side must be odd, got {side}")
    if side < 3:
        raise GeometryError(f"side must be at least 3, got {side}")
    return [CentralWindow(k) for k in range((side - 1) // 2)]


@lru_cache(maxsize=None)
def window_support(side: int) -> frozenset:
    """Union of the central windows of a ``side`` square."""
    out = set()
    for w in central_windows(side):
        out |= w.cells
    return frozenset(out)


def parse_region(text: str) -> Region:
    """Parse the ``#``/``.``/``*`` region grammar.

    Short rows are padded with ``.``; trailing blank lines are dropped.
    """
    lines = text.replace("\r\n", "\n").replace("\r", "\n").split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    if not lines:
        raise RegionSyntaxError("region text has no rows")
    cells = set()
    missing = None
    width = 0
    for r, line in enumerate(lines):
        width = max(width, len(line))
        for c, ch in enumerate(line):
            if ch == "#":
                cells.add(Cell(r, c))
            elif ch == "*":
                if missing is not None:
                    raise MultipleMissing(
                        f"second '*' at line {r + 1}, column {c + 1}; first at {tuple(missing)}"
                    )
                missing = Cell(r, c)
            elif ch != ".":
                raise RegionSyntaxError(f"bad character {ch!r} at line {r + 1}, column {c + 1}")
    if width == 0:
        raise RegionSyntaxError("region text has no columns")
    return Region(width=width, height=len(lines), cells=frozenset(cells), missing=missing)


def serialize_region(region: Region) -> str:
    rows = []
    for r in range(region.height):
        row = []
        for c in range(region.width):
            cell = (r, c)
            if cell == region.missing:
                row.append("*")
            elif cell in region.cells:
                row.append("#")
            else:
                row.append(".")
        rows.append("".join(row))
    return "\n".join(rows) + "\n"


def neighbors4(cell) -> Iterable[Cell]:
    r, c = cell
    yield Cell(r - 1, c)
    yield Cell(r + 1, c)
    yield Cell(r, c - 1)
    yield Cell(r, c + 1)


def components4(cells) -> list:
    """Connected components under edge adjacency, sorted by their least cell.

    Components hold plain ``(row, col)`` tuples, which compare and hash like
    the equivalent ``Cell`` values.
    """
    remaining = {(r, c) for r, c in cells}
    comps = []
    while remaining:
        start = min(remaining)
        remaining.discard(start)
        stack = [start]
        comp = [start]
        while stack:
            r, c = stack.pop()
            for nb in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
                if nb in remaining:
                    remaining.discard(nb)
                    comp.append(nb)
                    stack.append(nb)
        comps.append(frozenset(comp))
    comps.sort(key=min)
    return comps
