"""Write SVG pictures of the first tiling at each position of a square."""

import argparse
from pathlib import Path

from ribbontile.geometry import admissible_positions, make_deficient_square
from ribbontile.render import render_svg
from ribbontile.solver import enumerate_tilings
from ribbontile.structure import extract_crack
from ribbontile.tiles import TileSet


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--side", type=int, default=11)
    ap.add_argument("--tileset", default="t4")
    ap.add_argument("--outdir", default="figures")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for pos in admissible_positions(args.side):
        region = make_deficient_square(args.side, (pos - 1, pos - 1))
        tiling = next(enumerate_tilings(region, TileSet.parse(args.tileset)))
        crack = extract_crack(region, tiling).crack_cells
        path = out / f"side{args.side}_pos{pos}.svg"
        path.write_text(render_svg(region, tiling, crack, title=f"side {args.side}, position {pos}"))
        print(path)


if __name__ == "__main__":
    main()
