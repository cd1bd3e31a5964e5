"""Domino and domino+monomer counts on square boards.

The workhorse is a broken-profile DP over cells in row-major order. Its
state is the set of upcoming cells already covered by vertical or
horizontal dominoes started earlier, kept as a ``width + 1`` bit mask.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from math import comb

import mpmath


class DimerError(ValueError):
    pass


class OddSide(DimerError):
    pass


class PositionOutOfRange(DimerError):
    pass


class PrecisionLoss(ArithmeticError):
    pass


def _profile_counts(height: int, width: int, blocked=frozenset(), monomers=False) -> list:
    """Tilings counted by number of monomers on the main diagonal.

    Entry ``k`` of the result is the number of tilings with exactly ``k``
    diagonal monomers; without monomers the list has a single entry.
    """
    if height == 0 or width == 0:
        return [1]
    blocked = {r * width + c for r, c in blocked}
    states = {(0, 0): 1}
    top = 1 << width
    for i in range(height * width):
        r, c = divmod(i, width)
        nxt: dict = defaultdict(int)
        if i in blocked:
            for (mask, k), cnt in states.items():
                if not mask & 1:
                    nxt[(mask >> 1, k)] += cnt
            states = nxt
            continue
        right_ok = c + 1 < width and (i + 1) not in blocked
        down_ok = r + 1 < height and (i + width) not in blocked
        on_diag = int(r == c)
        for (mask, k), cnt in states.items():
            if mask & 1:
                nxt[(mask >> 1, k)] += cnt
                continue
            if right_ok and not mask & 2:
                nxt[((mask | 2) >> 1, k)] += cnt
            if down_ok:
                nxt[((mask | top) >> 1, k)] += cnt
            if monomers:
                nxt[(mask >> 1, k + on_diag)] += cnt
        states = nxt
    out = [0] * (min(height, width) + 1 if monomers else 1)
    for (mask, k), cnt in states.items():
        if mask == 0:
            out[k] += cnt
    return out


def count_dimer_tilings(n: int) -> int:
    """Domino tilings of the ``n x n`` board."""
    if n < 0:
        raise DimerError(f"board side must be nonnegative, got {n}")
    if n % 2:
        raise OddSide(f"an odd board has no perfect domino tiling (n={n})")
    return _profile_counts(n, n)[0]


def count_dimer_rectangle(height: int, width: int, blocked=()) -> int:
    return _profile_counts(height, width, frozenset(blocked))[0]


def count_dimer_deficient(n: int, diag_pos: int) -> int:
    """Domino tilings of the ``n x n`` board minus diagonal cell ``diag_pos`` (1-indexed)."""
    if not 1 <= diag_pos <= n:
        raise PositionOutOfRange(f"diagonal position {diag_pos} outside 1..{n}")
    cell = (diag_pos - 1, diag_pos - 1)
    return _profile_counts(n, n, frozenset([cell]))[0]


@dataclass(frozen=True)
class DiagonalProfile:
    n: int
    counts: tuple

    @property
    def total(self) -> int:
        return sum(self.counts)

    def to_json(self) -> dict:
        return {"n": self.n, "N": list(self.counts)}


def diagonal_profile(n: int) -> DiagonalProfile:
    """Domino+monomer tilings of the ``n x n`` board by diagonal monomer count."""
    if n < 1:
        raise DimerError(f"board side must be positive, got {n}")
    return DiagonalProfile(n, tuple(_profile_counts(n, n, monomers=True)))


def count_monomer_dimer_tilings(height: int, width: int) -> int:
    """All domino+monomer tilings, by a row-to-row transfer of vertical stubs.

    Kept deliberately separate from the cell-by-cell profile DP so the two
    can check each other.
    """
    full = (1 << width) - 1

    def fill(col, incoming, outgoing, acc):
        # incoming: cells of this row already covered from the row above
        if col == width:
            acc[outgoing] += 1
            return
        bit = 1 << col
        if incoming & bit:
            fill(col + 1, incoming, outgoing, acc)
            return
        fill(col + 1, incoming, outgoing, acc)
        fill(col + 1, incoming, outgoing | bit, acc)
        nbit = bit << 1
        if col + 1 < width and not incoming & nbit:
            fill(col + 2, incoming, outgoing, acc)

    rows = {0: 1}
    for r in range(height):
        nxt: dict = defaultdict(int)
        for incoming, cnt in rows.items():
            acc: dict = defaultdict(int)
            fill(0, incoming, 0, acc)
            last = r == height - 1
            for out, ways in acc.items():
                if last and out:
                    continue
                nxt[out] += cnt * ways
        rows = nxt
    assert all(k & ~full == 0 for k in rows)
    return rows.get(0, 0)


def capital_N(m: int, include_k0: bool = False) -> int:
    """Weighted diagonal-monomer sum ``sum 2**k * N_k`` on the ``2m x 2m`` board."""
    if m < 1:
        raise DimerError(f"m must be at least 1, got {m}")
    counts = diagonal_profile(2 * m).counts
    lo = 0 if include_k0 else 1
    return sum((1 << k) * counts[k] for k in range(lo, 2 * m + 1))


def kasteleyn_closed_form(n: int, dps: int = 30, max_dps: int = 4000) -> int:
    """Domino tilings of the ``n x n`` board from the cosine product formula."""
    if n < 2 or n % 2:
        raise OddSide(f"closed form needs an even side >= 2, got {n}")
    half = n // 2
    while dps <= max_dps:
        with mpmath.workdps(dps):
            prod = mpmath.mpf(1)
            for j in range(1, half + 1):
                cj = mpmath.cos(j * mpmath.pi / (n + 1)) ** 2
                for k in range(1, half + 1):
                    ck = mpmath.cos(k * mpmath.pi / (n + 1)) ** 2
                    prod *= 4 * cj + 4 * ck
            # a value with more digits than the working precision rounds to
            # an integer trivially, so demand ten guard digits first
            if mpmath.log10(prod) + 10 < dps:
                nearest = mpmath.nint(prod)
                if abs(prod - nearest) <= mpmath.mpf("1e-3"):
                    return int(nearest)
        dps *= 2
    raise PrecisionLoss(f"closed form for n={n} did not settle within {max_dps} digits")


def central_binomial(m: int) -> int:
    return comb(2 * m, m)
