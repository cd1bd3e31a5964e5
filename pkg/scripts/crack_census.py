"""Distinct and weighted crack counts, plus halves of unequal area."""

import argparse

from ribbontile.geometry import admissible_positions
from ribbontile.tiles import TileSet
from ribbontile.verify import analyze_square


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sides", type=int, nargs="+", default=[5, 7, 9])
    ap.add_argument("--tileset", default="t4")
    args = ap.parse_args()
    tileset = TileSet.parse(args.tileset)
    for side in args.sides:
        for pos in admissible_positions(side):
            s = analyze_square(side, pos, tileset)
            print(
                f"side {side:2d} pos {pos:2d}: tilings {s.tilings:7d}  cracks {len(s.crack_tilings):3d}"
                f"  weighted {s.weighted_cracks:3d}  images {len(s.fibers):6d}  unequal halves {s.unequal_area}"
            )


if __name__ == "__main__":
    main()
