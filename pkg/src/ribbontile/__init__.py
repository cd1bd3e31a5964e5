"""Exact tilings of deficient squares by ribbon L-tetrominoes.

Counting, enumeration, crack analysis, the half-scale projection onto
domino/monomer tilings, and crack propagation.
"""

from ribbontile.geometry import (
    Cell,
    CentralWindow,
    Region,
    SquareClass,
    SquareKind,
    central_windows,
    classify_side,
    diagonal_position,
    make_deficient_square,
    parse_region,
    serialize_region,
)
from ribbontile.tiles import Placement, TileKind, TileSet, placements_in, tile_cells
from ribbontile.solver import Tiling, count_tilings, enumerate_tilings, validate_tiling

__all__ = [
    "Cell",
    "CentralWindow",
    "Placement",
    "Region",
    "SquareClass",
    "SquareKind",
    "TileKind",
    "TileSet",
    "Tiling",
    "central_windows",
    "classify_side",
    "count_tilings",
    "diagonal_position",
    "enumerate_tilings",
    "make_deficient_square",
    "parse_region",
    "placements_in",
    "serialize_region",
    "tile_cells",
    "validate_tiling",
]
