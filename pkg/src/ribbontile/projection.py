"""Half-scale projection of square tilings onto domino/monomer tilings.

Regular blocks are shrunk by a factor two around the corner their staircase
is anchored at: a SW block with 2-square origin ``(r, c)`` (``r`` odd,
``c`` even) lands on image cell ``((r - 1) / 2, c / 2)`` and a NE block
(``r`` even, ``c`` odd) on ``(r / 2, (c - 1) / 2)``. Both maps send the
diagonal 2-squares of window ``k`` to image cell ``(k, k)``, which glues the
two halves back into one board. The crack and the missing cell disappear.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from ribbontile.geometry import Cell, Region, make_deficient_square
from ribbontile.solver import Tiling, enumerate_tilings, validate_tiling
from ribbontile.structure import Decomposition, Side, decompose
from ribbontile.tiles import MacroPiece, TileSet


class ProjectionError(ValueError):
    pass


class StructureViolation(ProjectionError):
    pass


class InconsistentImage(ProjectionError):
    pass


class CrackNotCompletable(ProjectionError):
    pass


class CrackCompletionNotUnique(ProjectionError):
    pass


@dataclass(frozen=True)
class ImageTiling:
    size: int
    missing: Optional[Cell] = None
    dominoes: tuple = ()
    monomers: tuple = ()

    def __post_init__(self):
        if self.missing is not None:
            object.__setattr__(self, "missing", Cell(*self.missing))
        doms = tuple(sorted(tuple(sorted((Cell(*a), Cell(*b)))) for a, b in self.dominoes))
        object.__setattr__(self, "dominoes", doms)
        object.__setattr__(self, "monomers", tuple(sorted(Cell(*m) for m in self.monomers)))

    def defects(self) -> list:
        problems = []
        seen = {}
        pieces = [("domino", d) for d in self.dominoes] + [("monomer", (m,)) for m in self.monomers]
        for name, cells in pieces:
            if name == "domino":
                (r1, c1), (r2, c2) = cells
                if abs(r1 - r2) + abs(c1 - c2) != 1:
                    problems.append(f"domino {cells} is not two adjacent cells")
            for cell in cells:
                if not (0 <= cell[0] < self.size and 0 <= cell[1] < self.size):
                    problems.append(f"{name} cell {tuple(cell)} outside the board")
                elif cell == self.missing:
                    problems.append(f"{name} covers the missing cell {tuple(cell)}")
                elif cell in seen:
                    problems.append(f"cell {tuple(cell)} covered twice")
                seen[cell] = name
        for r in range(self.size):
            for c in range(self.size):
                if (r, c) != self.missing and (r, c) not in seen:
                    problems.append(f"cell {(r, c)} uncovered")
        return problems

    @property
    def diagonal_monomers(self) -> tuple:
        return tuple(m for m in self.monomers if m.row == m.col)

    def to_json(self) -> dict:
        return {
            "size": self.size,
            "missing": None if self.missing is None else list(self.missing),
            "dominoes": [[list(a), list(b)] for a, b in self.dominoes],
            "monomers": [list(m) for m in self.monomers],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj) -> "ImageTiling":
        if isinstance(obj, str):
            obj = json.loads(obj)
        missing = obj.get("missing")
        return cls(
            size=obj["size"],
            missing=None if missing is None else Cell(*missing),
            dominoes=tuple((Cell(*a), Cell(*b)) for a, b in obj.get("dominoes", [])),
            monomers=tuple(Cell(*m) for m in obj.get("monomers", [])),
        )


@dataclass(frozen=True)
class LiftChoices:
    variant_bit: Optional[int] = None
    monomer_sides: dict = field(default_factory=dict)


def image_size(side: int) -> int:
    return (side - 1) // 2


def image_missing(side: int, missing_pos: int) -> Optional[Cell]:
    if side % 4 != 3:
        return None
    k0 = (missing_pos - 2) // 2
    return Cell(k0, k0)


def _shrink(origin, side: Side) -> Cell:
    r, c = origin
    if side is Side.LOWER:
        return Cell((r - 1) // 2, c // 2)
    return Cell(r // 2, (c - 1) // 2)


def _grow(cell, side: Side) -> Cell:
    a, b = cell
    if side is Side.LOWER:
        return Cell(2 * a + 1, 2 * b)
    return Cell(2 * a, 2 * b + 1)


def _check_square(region: Region) -> int:
    side = region.width
    if not region.is_deficient_square or side % 2 == 0 or side < 3:
        raise StructureViolation("projection is defined on odd deficient squares")
    return side


def project(region: Region, tiling: Tiling, decomposition: Optional[Decomposition] = None) -> ImageTiling:
    side = _check_square(region)
    dec = decomposition or decompose(region, tiling)
    dominoes = []
    monomers = []
    for b in dec.blocks:
        cells = [_shrink(sq, b.side) for sq in b.piece.two_squares]
        if len(cells) == 2:
            dominoes.append(tuple(cells))
        else:
            monomers.append(cells[0])
    missing = None
    if side % 4 == 3:
        r, c = region.missing
        if r != c or (r + 1) % 2:
            raise StructureViolation(f"missing cell {tuple(region.missing)} is not at an even diagonal position")
        missing = image_missing(side, r + 1)
    image = ImageTiling(image_size(side), missing, tuple(dominoes), tuple(monomers))
    problems = image.defects()
    if problems:
        raise StructureViolation("; ".join(problems[:5]))
    return image


def _domino_side(a: Cell, b: Cell) -> Side:
    for cell, other in ((a, b), (b, a)):
        k = cell.row
        if cell.row == cell.col:
            if other in ((k + 1, k), (k, k - 1)):
                return Side.LOWER
            return Side.UPPER
    return Side.LOWER if a.row > a.col else Side.UPPER


def _check_image(image: ImageTiling, side: int, missing_pos: Optional[int] = None) -> None:
    if side % 2 == 0 or side < 3:
        raise InconsistentImage(f"side {side} is not an odd side >= 3")
    if image.size != image_size(side):
        raise InconsistentImage(f"image size {image.size} does not match side {side}")
    if side % 4 == 3:
        if image.missing is None:
            raise InconsistentImage("side 4m+3 images carry a missing diagonal cell")
        if image.missing.row != image.missing.col:
            raise InconsistentImage(f"image missing cell {tuple(image.missing)} is off the diagonal")
        if missing_pos is not None and image.missing != image_missing(side, missing_pos):
            raise InconsistentImage(f"image missing cell does not match position {missing_pos}")
    elif image.missing is not None:
        raise InconsistentImage("side 4m+1 images have no missing cell")
    if missing_pos is not None:
        want = 1 if side % 4 == 1 else 0
        if not 1 <= missing_pos <= side or missing_pos % 2 != want:
            raise InconsistentImage(f"position {missing_pos} is not admissible for side {side}")
    problems = image.defects()
    if problems:
        raise InconsistentImage("; ".join(problems[:5]))


def lift_completions(image: ImageTiling, side: int, missing_pos: int, choices: Optional[LiftChoices] = None):
    """Regular placements implied by ``image`` and every crack completion."""
    choices = choices or LiftChoices()
    _check_image(image, side, missing_pos)
    diag_monos = set(image.diagonal_monomers)
    if set(choices.monomer_sides) != diag_monos:
        raise InconsistentImage(
            f"monomer_sides must name exactly the diagonal monomers {sorted(map(tuple, diag_monos))}"
        )
    region = make_deficient_square(side, (missing_pos - 1, missing_pos - 1))
    pieces = []
    for a, b in image.dominoes:
        s = _domino_side(a, b)
        p, q = sorted((_grow(a, s), _grow(b, s)))
        pieces.append(MacroPiece(p, "H" if p.row == q.row else "V"))
    for m in image.monomers:
        if m.row == m.col:
            s = Side(choices.monomer_sides[m])
        else:
            s = Side.LOWER if m.row > m.col else Side.UPPER
        pieces.append(MacroPiece(_grow(m, s), "S"))
    covered: set = set()
    regular = []
    for piece in pieces:
        cells = piece.cells
        if cells & covered or not cells <= region.cells:
            raise InconsistentImage(f"block at {tuple(piece.origin)} does not fit")
        covered |= cells
        regular.extend(piece.placements)
    rest = region.cells - covered
    if not rest:
        return region, regular, [()]
    crack_region = Region(width=side, height=side, cells=frozenset(rest))
    completions = [t.placements for t in enumerate_tilings(crack_region, TileSet.RIBBON_T4, limit=3)]
    return region, regular, completions


def lift(image: ImageTiling, side: int, missing_pos: int, choices: Optional[LiftChoices] = None) -> Tiling:
    """Rebuild the square tiling over ``image``.

    Off-diagonal pieces take the staircase of their half; diagonal dominoes
    follow their partner cell; diagonal monomers follow
    ``choices.monomer_sides``. The leftover crack is filled with L tiles,
    which must be possible in exactly one way (side 4m+1) or two ways
    (side 4m+3, picked by ``choices.variant_bit``).
    """
    choices = choices or LiftChoices()
    if side % 4 == 3 and choices.variant_bit not in (0, 1):
        raise InconsistentImage("side 4m+3 needs variant_bit 0 or 1")
    if side % 4 == 1 and choices.variant_bit is not None:
        raise InconsistentImage("side 4m+1 takes no variant_bit")
    region, regular, completions = lift_completions(image, side, missing_pos, choices)
    if not completions:
        raise CrackNotCompletable("the crack left by the image cannot be tiled")
    expected = 2 if side % 4 == 3 else 1
    if len(completions) != expected:
        raise CrackCompletionNotUnique(f"crack has {len(completions)} completions, expected {expected}")
    pick = completions[choices.variant_bit or 0]
    tiling = Tiling(tuple(regular) + tuple(pick))
    if validate_tiling(region, tiling):
        raise CrackNotCompletable("lifted placements do not tile the square")
    return tiling


def read_choices(region: Region, tiling: Tiling) -> LiftChoices:
    """The lift choices that reproduce ``tiling`` from its own image."""
    side = _check_square(region)
    dec = decompose(region, tiling)
    image = project(region, tiling, dec)
    sides = {}
    for b in dec.square_blocks:
        cell = _shrink(b.origin, b.side)
        if cell.row == cell.col:
            sides[cell] = b.side
    variant = None
    if side % 4 == 3:
        missing_pos = region.missing.row + 1
        _, _, completions = lift_completions(image, side, missing_pos, LiftChoices(None, sides))
        crack = tuple(sorted(dec.irregular))
        matches = [i for i, comp in enumerate(completions) if tuple(sorted(comp)) == crack]
        if len(matches) != 1:
            raise StructureViolation("source crack is not one of the lift completions")
        variant = matches[0]
    return LiftChoices(variant, sides)


def preimage_cardinality(image: ImageTiling, side: int) -> int:
    _check_image(image, side)
    k = len(image.diagonal_monomers)
    return (1 << k) * (2 if side % 4 == 3 else 1)


def diagonal_balance(image: ImageTiling) -> tuple:
    """Diagonal cells covered by SW-type versus NE-type dominoes."""
    lower = upper = 0
    for a, b in image.dominoes:
        if a.row == a.col or b.row == b.col:
            if _domino_side(a, b) is Side.LOWER:
                lower += 1
            else:
                upper += 1
    return lower, upper

