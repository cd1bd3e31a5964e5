"""Slow, independent counters used to cross-check the fast paths."""

from __future__ import annotations

from ribbontile.tiles import tile_cells


def count_perfect_matchings(cells) -> int:
    """Perfect matchings of the grid graph on ``cells`` by plain recursion."""
    cells = frozenset((r, c) for r, c in cells)

    def rec(remaining):
        if not remaining:
            return 1
        r, c = min(remaining)
        rest = remaining - {(r, c)}
        total = 0
        for nb in ((r, c + 1), (r + 1, c), (r, c - 1), (r - 1, c)):
            if nb in rest:
                total += rec(rest - {nb})
        return total

    return rec(cells)


def count_monomer_dimer(cells) -> list:
    """Domino+monomer tilings of ``cells`` bucketed by diagonal monomers."""
    cells = frozenset((r, c) for r, c in cells)
    size = max((max(r, c) for r, c in cells), default=0) + 2
    out = [0] * size

    def rec(remaining, k):
        if not remaining:
            out[k] += 1
            return
        r, c = min(remaining)
        rest = remaining - {(r, c)}
        rec(rest, k + (r == c))
        for nb in ((r, c + 1), (r + 1, c)):
            if nb in rest:
                rec(rest - {nb}, k)

    rec(cells, 0)
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def count_tilings_naive(cells, kinds) -> int:
    """Tilings by translated tiles, trying every anchor that covers the least cell."""
    cells = frozenset((r, c) for r, c in cells)
    shapes = [tuple(k.offsets) for k in kinds]

    def rec(remaining):
        if not remaining:
            return 1
        r, c = min(remaining)
        total = 0
        for offs in shapes:
            for dr, dc in offs:
                anchor = (r - dr, c - dc)
                placed = frozenset((anchor[0] + a, anchor[1] + b) for a, b in offs)
                if placed <= remaining:
                    total += rec(remaining - placed)
        return total

    return rec(cells)


def naive_tilings(cells, kinds) -> list:
    """Every tiling as a frozenset of ``(kind, anchor)`` pairs."""
    cells = frozenset((r, c) for r, c in cells)
    out = []

    def rec(remaining, chosen):
        if not remaining:
            out.append(frozenset(chosen))
            return
        r, c = min(remaining)
        for kind in kinds:
            for dr, dc in kind.offsets:
                anchor = (r - dr, c - dc)
                placed = tile_cells(kind, anchor)
                if placed <= remaining:
                    chosen.append((kind, anchor))
                    rec(remaining - placed, chosen)
                    chosen.pop()

    rec(cells, [])
    return out
