"""Compare T4+ counts with weighted domino+monomer sums on the half-size board.

For side 4m+1 the candidates are sum_{k>=1} 2^k N_k and sum_{k>=0} 2^k N_k
on the 2m x 2m board. For side 4m+3 the count is set against twice the
k>=0 sum and against twice the weighted sum over the deficient
(2m+1)-board, which depends on the position.
"""

import argparse

from ribbontile.dimers import _profile_counts, capital_N
from ribbontile.geometry import admissible_positions, make_deficient_square
from ribbontile.solver import count_tilings
from ribbontile.tiles import TileSet


def weighted_deficient(size, pos):
    counts = _profile_counts(size, size, frozenset([(pos - 1, pos - 1)]), monomers=True)
    return sum((1 << k) * n for k, n in enumerate(counts))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sides", type=int, nargs="+", default=[5, 7, 9, 11])
    ap.add_argument("--threads", type=int, default=1)
    args = ap.parse_args()
    for side in args.sides:
        for pos in admissible_positions(side):
            n = count_tilings(make_deficient_square(side, (pos - 1, pos - 1)), TileSet.RIBBON_T4_PLUS, threads=args.threads)
            if side % 4 == 1:
                m = (side - 1) // 4
                lo, hi = capital_N(m), capital_N(m, include_k0=True)
                print(f"side {side} pos {pos}: {n}  k>=1 {lo}  k>=0 {hi}")
            else:
                m = (side - 3) // 4
                flat = 2 * capital_N(m, include_k0=True) if m else 2
                print(f"side {side} pos {pos}: {n}  2N {flat}  2W(deficient) {2 * weighted_deficient(2 * m + 1, pos // 2)}")


if __name__ == "__main__":
    main()
