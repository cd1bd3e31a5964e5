"""Exhaustive sweep over deficient rectangles with area 1 mod 4."""

import pytest

from ribbontile.geometry import Region, admissible_positions
from ribbontile.solver import count_tilings
from ribbontile.tiles import TileSet

SHAPES = [(p, q) for p in range(3, 10) for q in range(3, 10) if (p * q) % 4 == 1]


@pytest.mark.parametrize("p,q", SHAPES)
def test_only_admissible_diagonal_cells_are_tileable(p, q):
    for r in range(p):
        for c in range(q):
            n = count_tilings(Region.deficient_rectangle(p, q, (r, c)), TileSet.RIBBON_T4)
            allowed = p == q and r == c and r + 1 in admissible_positions(p)
            assert (n > 0) == allowed, (p, q, r, c, n)
