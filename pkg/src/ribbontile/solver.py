"""Exact-cover counting and enumeration of tilings.

The search always branches on the first uncovered cell in row-major order.
Every tile shape contains its own NW bounding-box corner and all its other
cells come later in row-major order, so the tile covering that cell must be
anchored there: each branch point has at most one option per tile kind.

Occupancy is a single int over the bounding box (bit ``r * width + c``).
Because every cell before the branch cell is covered, the occupancy int
alone identifies a search state, which makes the subtree counts memoizable.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional

from ribbontile.geometry import Cell, Region
from ribbontile.tiles import Placement, TileKind, TileSet, tile_cells


@dataclass(frozen=True)
class Tiling:
    placements: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "placements", tuple(sorted(self.placements)))

    def __len__(self):
        return len(self.placements)

    def __iter__(self):
        return iter(self.placements)

    @property
    def cells(self) -> frozenset:
        out = set()
        for p in self.placements:
            out |= p.cells
        return frozenset(out)

    def to_json(self) -> dict:
        return {"placements": [p.to_json() for p in self.placements]}

    def to_jsonl(self) -> str:
        return json.dumps(self.to_json(), separators=(",", ":"))

    @classmethod
    def from_json(cls, obj) -> "Tiling":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return cls(tuple(Placement.from_json(p) for p in obj["placements"]))


class _Problem:
    def __init__(self, width: int, height: int, start: int, options: list):
        self.width = width
        self.height = height
        self.full = (1 << (width * height)) - 1
        self.start = start
        self.options = options
        self.memo: dict = {}

    @classmethod
    def compile(cls, region: Region, kinds) -> "_Problem":
        w, h = region.width, region.height
        start = 0
        for r in range(h):
            for c in range(w):
                if (r, c) not in region.cells:
                    start |= 1 << (r * w + c)
        options = [() for _ in range(w * h)]
        for r, c in region.cells:
            opts = []
            for kind in kinds:
                cells = tile_cells(kind, (r, c))
                if cells <= region.cells:
                    mask = 0
                    for rr, cc in cells:
                        mask |= 1 << (rr * w + cc)
                    opts.append((mask, Placement(Cell(r, c), kind)))
            options[r * w + c] = tuple(opts)
        return cls(w, h, start, options)

    def first_free(self, occ: int) -> int:
        return (~occ & (occ + 1)).bit_length() - 1

    def count(self, occ: int) -> int:
        if occ == self.full:
            return 1
        memo = self.memo
        hit = memo.get(occ)
        if hit is not None:
            return hit
        total = 0
        for mask, _ in self.options[self.first_free(occ)]:
            if not occ & mask:
                total += self.count(occ | mask)
        memo[occ] = total
        return total

    def children(self, occ: int):
        i = self.first_free(occ)
        for mask, placement in self.options[i]:
            if not occ & mask:
                yield occ | mask, placement

    def walk(self, occ: int, stack: list) -> Iterator[tuple]:
        if occ == self.full:
            yield tuple(stack)
            return
        for child, placement in self.children(occ):
            if self.count(child) == 0:
                continue
            stack.append(placement)
            yield from self.walk(child, stack)
            stack.pop()


def _kinds(tileset) -> tuple:
    if isinstance(tileset, (list, tuple, frozenset, set)):
        return tuple(sorted(TileKind(k) for k in tileset))
    kinds = TileSet.parse(tileset).kinds
    if not kinds:
        raise ValueError(f"tile set {tileset} has no single-tile kinds")
    return kinds


def _count_states(args) -> int:
    width, height, start, options, states = args
    prob = _Problem(width, height, start, options)
    return sum(mult * prob.count(occ) for occ, mult in states)


def count_tilings(region: Region, tileset, threads: int = 1) -> int:
    """Exact number of tilings of ``region`` by the kinds of ``tileset``.

    With ``threads > 1`` the top of the search tree is expanded and the
    subtrees are counted in worker processes; the sum is the same either way.
    """
    prob = _Problem.compile(region, _kinds(tileset))
    if threads <= 1:
        return prob.count(prob.start)

    frontier = {prob.start: 1}
    done = 0
    while frontier and len(frontier) < 4 * threads:
        nxt: dict = {}
        for occ, mult in frontier.items():
            if occ == prob.full:
                done += mult
                continue
            for child, _ in prob.children(occ):
                nxt[child] = nxt.get(child, 0) + mult
        frontier = nxt
    states = sorted(frontier.items())
    chunks = [states[i::threads] for i in range(threads)]
    jobs = [(prob.width, prob.height, prob.start, prob.options, ch) for ch in chunks if ch]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return done + sum(pool.map(_count_states, jobs))


def enumerate_tilings(region: Region, tileset, limit: Optional[int] = None) -> Iterator[Tiling]:
    """Yield every tiling once, in the order fixed by the branching rule."""
    prob = _Problem.compile(region, _kinds(tileset))
    if limit is not None and limit <= 0:
        return
    emitted = 0
    for placements in prob.walk(prob.start, []):
        yield Tiling(placements)
        emitted += 1
        if limit is not None and emitted >= limit:
            return


@dataclass(frozen=True)
class OverlapAt:
    cell: Cell


@dataclass(frozen=True)
class UncoveredCell:
    cell: Cell


@dataclass(frozen=True)
class OutsideRegion:
    placement: Placement


def validate_tiling(region: Region, tiling: Tiling) -> list:
    """Every defect of ``tiling`` as a cover of ``region``; empty means exact."""
    violations = []
    seen: set = set()
    overlaps: set = set()
    for p in tiling.placements:
        cells = p.cells
        if not cells <= region.cells:
            violations.append(OutsideRegion(p))
        overlaps |= cells & seen
        seen |= cells
    violations.extend(OverlapAt(c) for c in sorted(overlaps))
    violations.extend(UncoveredCell(c) for c in sorted(region.cells - seen))
    return violations
