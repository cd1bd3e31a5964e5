"""Tiling counts of deficient squares at every diagonal position."""

import argparse

from ribbontile.geometry import admissible_positions, make_deficient_square
from ribbontile.solver import count_tilings
from ribbontile.tiles import TileSet


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sides", type=int, nargs="+", default=[5, 7, 9, 11])
    ap.add_argument("--tileset", default="t4")
    ap.add_argument("--threads", type=int, default=1)
    ap.add_argument("--all-positions", action="store_true", help="include positions of the wrong parity")
    args = ap.parse_args()
    tileset = TileSet.parse(args.tileset)
    for side in args.sides:
        positions = range(1, side + 1) if args.all_positions or tileset is TileSet.RIBBON_T4_PLUS else admissible_positions(side)
        row = [count_tilings(make_deficient_square(side, (p - 1, p - 1)), tileset, threads=args.threads) for p in positions]
        print(f"side {side:2d} {tileset.value:6s} " + " ".join(f"{p}:{n}" for p, n in zip(positions, row)))


if __name__ == "__main__":
    main()
