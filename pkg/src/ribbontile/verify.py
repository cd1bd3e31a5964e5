"""The claim-by-claim verification suite behind ``ribbontile verify``.

Each deficient square is enumerated once; every check that needs the
tilings (crack structure, census, projection fibers, lifts) reads from that
single pass.
"""

from __future__ import annotations

import json
import logging
import time
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from math import comb
from typing import Optional

from ribbontile.dimers import (
    capital_N,
    count_dimer_deficient,
    count_dimer_tilings,
    diagonal_profile,
    _profile_counts,
    kasteleyn_closed_form,
)
from ribbontile.geometry import Region, admissible_positions, make_deficient_square
from ribbontile.oracles import count_perfect_matchings
from ribbontile.projection import (
    LiftChoices,
    diagonal_balance,
    lift,
    preimage_cardinality,
    project,
    read_choices,
)
from ribbontile.propagation import propagate, propagation_checks
from ribbontile.solver import count_tilings, enumerate_tilings
from ribbontile.structure import Side, decompose, extract_crack, validate_crack, window_balance
from ribbontile.tiles import TileSet

log = logging.getLogger(__name__)

PASS, FAIL, RECORDED = "pass", "fail", "recorded"

# side 11, positions 2, 4, 6, 8, 10
REMARK_SIDE_11 = (384, 224, 392, 224, 384)

GOLDEN_T4 = {
    5: {1: 2, 3: 2, 5: 2},
    7: {2: 8, 4: 4, 6: 8},
    9: {1: 36, 3: 36, 5: 36, 7: 36, 9: 36},
    11: dict(zip((2, 4, 6, 8, 10), REMARK_SIDE_11)),
}
GOLDEN_T4_FULL = {13: {p: 6728 for p in (1, 3, 5, 7, 9, 11, 13)}}


@dataclass
class Claim:
    claim_id: str
    expected: str
    observed: object
    status: str

    def to_json(self) -> dict:
        return {
            "claim": self.claim_id,
            "expected": self.expected,
            "observed": self.observed,
            "status": self.status,
        }


@dataclass
class VerificationReport:
    suite: str
    claims: list = field(default_factory=list)
    runtime: float = 0.0

    def add(self, claim_id: str, expected: str, observed, ok: Optional[bool]) -> Claim:
        status = RECORDED if ok is None else PASS if ok else FAIL
        claim = Claim(claim_id, expected, observed, status)
        self.claims.append(claim)
        log.info("%-8s %s", status.upper(), claim_id)
        return claim

    @property
    def failed(self) -> list:
        return [c for c in self.claims if c.status == FAIL]

    @property
    def exit_code(self) -> int:
        return 1 if self.failed else 0

    def summary(self) -> dict:
        counts = Counter(c.status for c in self.claims)
        return {s: counts.get(s, 0) for s in (PASS, FAIL, RECORDED)}

    def to_json(self) -> dict:
        # runtime stays out so reports are byte-comparable
        return {
            "suite": self.suite,
            "summary": self.summary(),
            "claims": [c.to_json() for c in self.claims],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1, sort_keys=True)

    def lines(self) -> list:
        out = []
        for c in self.claims:
            obs = json.dumps(c.observed, sort_keys=True, separators=(",", ":"))
            out.append(f"{c.status.upper():8s} {c.claim_id}  expected: {c.expected}  observed: {obs}")
        s = self.summary()
        out.append(
            f"{s[PASS]} passed, {s[FAIL]} failed, {s[RECORDED]} recorded in {self.runtime:.1f}s"
        )
        return out


@dataclass
class SquareSummary:
    side: int
    position: int
    tileset: TileSet
    tilings: int = 0
    verdict_failures: Counter = field(default_factory=Counter)
    structure_errors: Counter = field(default_factory=Counter)
    balance_failures: int = 0
    unequal_area: int = 0
    crack_tilings: dict = field(default_factory=dict)
    crack_fillings: dict = field(default_factory=dict)
    fibers: Counter = field(default_factory=Counter)
    filling_not_unique: int = 0

    @property
    def weighted_cracks(self) -> int:
        return sum(self.crack_fillings.values())


_SUMMARIES: dict = {}


def analyze_square(side: int, position: int, tileset) -> SquareSummary:
    """Enumerate one deficient square and run every per-tiling check."""
    tileset = TileSet.parse(tileset)
    key = (side, position, tileset)
    if key in _SUMMARIES:
        return _SUMMARIES[key]
    region = make_deficient_square(side, (position - 1, position - 1))
    out = SquareSummary(side, position, tileset)
    m = (side - 1) // 4 if side % 4 == 1 else (side - 3) // 4
    fillings: dict = defaultdict(set)
    tilings_by_crack: dict = defaultdict(int)
    for t in enumerate_tilings(region, tileset):
        out.tilings += 1
        try:
            dec = decompose(region, t, check=False)
            report = extract_crack(region, t, dec)
        except ValueError as exc:
            out.structure_errors[type(exc).__name__] += 1
            continue
        verdict = validate_crack(report, side, tileset)
        for name, ok in verdict.flags().items():
            if not ok:
                out.verdict_failures[name] += 1
        if not verdict.equal_area_ok:
            out.unequal_area += 1
        if tileset is TileSet.RIBBON_T4:
            wb = window_balance(report)
            want_center = 1 if side % 4 == 3 else 0
            if (wb[Side.LOWER], wb[Side.UPPER], wb[Side.MISSING_CENTER], wb[Side.NONE]) != (m, m, want_center, 0):
                out.balance_failures += 1
        tilings_by_crack[report.crack_cells] += 1
        fillings[report.crack_cells].add(dec.irregular)
        try:
            out.fibers[project(region, t, dec)] += 1
        except ValueError as exc:
            out.structure_errors[type(exc).__name__] += 1
    out.crack_tilings = dict(tilings_by_crack)
    out.crack_fillings = {k: len(v) for k, v in fillings.items()}
    if tileset is TileSet.RIBBON_T4 and side % 4 == 1:
        out.filling_not_unique = sum(1 for v in fillings.values() if len(v) != 1)
    _SUMMARIES[key] = out
    return out


def _m(side: int) -> int:
    return (side - 1) // 4 if side % 4 == 1 else (side - 3) // 4


def _golden_counts(report, threads, table):
    """One claim per (side, position); ``table`` maps side -> {position: count}."""
    for side, row in table.items():
        for pos, want in row.items():
            region = make_deficient_square(side, (pos - 1, pos - 1))
            got = count_tilings(region, TileSet.RIBBON_T4, threads=threads)
            report.add(f"golden/t4/side{side}/pos{pos}", str(want), got, got == want)


def _dimer_triangle(report):
    for n, want in ((2, 2), (4, 36), (6, 6728)):
        board = [(r, c) for r in range(n) for c in range(n)]
        obs = {
            "brute_force": count_perfect_matchings(board),
            "profile_dp": count_dimer_tilings(n),
            "closed_form": kasteleyn_closed_form(n),
        }
        report.add(f"dimers/triangle/board{n}", f"all three = {want}", obs, set(obs.values()) == {want})


def _cross_law(report, threads, sides):
    for side in sides:
        m = _m(side)
        for pos in admissible_positions(side):
            region = make_deficient_square(side, (pos - 1, pos - 1))
            got = count_tilings(region, TileSet.RIBBON_T4, threads=threads)
            if side % 4 == 1:
                want = count_dimer_tilings(2 * m)
                text = f"dominoes of {2 * m}x{2 * m} = {want}"
            else:
                want = 2 * count_dimer_deficient(2 * m + 1, pos // 2)
                text = f"2 x dominoes of deficient {2 * m + 1}-square at {pos // 2} = {want}"
            report.add(f"crosslaw/t4/side{side}/pos{pos}", text, got, got == want)


def _structure(report, sides):
    for side in sides:
        total = 0
        fails: Counter = Counter()
        balance = 0
        errors: Counter = Counter()
        for pos in admissible_positions(side):
            s = analyze_square(side, pos, TileSet.RIBBON_T4)
            total += s.tilings
            fails.update(s.verdict_failures)
            errors.update(s.structure_errors)
            balance += s.balance_failures
        obs = {"tilings": total, "violations": dict(sorted(fails.items())), "errors": dict(sorted(errors.items()))}
        report.add(
            f"structure/t4/side{side}",
            "every tiling: decomposes, crack in windows, both corners, n or n+1 irregular, 2 equal halves",
            obs,
            total > 0 and not fails and not errors,
        )
        m = _m(side)
        report.add(
            f"window-balance/t4/side{side}",
            f"every tiling: {m} lower and {m} upper windows" + (", one missing-center" if side % 4 == 3 else ""),
            {"tilings": total, "violations": balance},
            total > 0 and balance == 0,
        )


def _census(report, tileset, sides):
    for side in sides:
        m = _m(side)
        base = comb(2 * m, m) if tileset is TileSet.RIBBON_T4 else 4 ** m
        want = base * (2 if side % 4 == 3 else 1)
        for pos in admissible_positions(side):
            s = analyze_square(side, pos, tileset)
            obs = {"distinct": len(s.crack_tilings), "weighted": s.weighted_cracks}
            report.add(f"census/{tileset.value}/side{side}/pos{pos}", f"weighted cracks = {want}", obs, s.weighted_cracks == want)
        if tileset is TileSet.RIBBON_T4 and side % 4 == 1:
            bad = sum(analyze_square(side, p, tileset).filling_not_unique for p in admissible_positions(side))
            report.add(f"crack-filling-unique/t4/side{side}", "each crack filled one way", {"cracks_with_several": bad}, bad == 0)


def _bijection(report, sides):
    for side in sides:
        m = _m(side)
        for pos in admissible_positions(side):
            s = analyze_square(side, pos, TileSet.RIBBON_T4)
            sizes = sorted(set(s.fibers.values()))
            if side % 4 == 1:
                want_images = count_dimer_tilings(2 * m)
                want_fiber = 1
            else:
                want_images = count_dimer_deficient(2 * m + 1, pos // 2)
                want_fiber = 2
            obs = {"images": len(s.fibers), "fiber_sizes": sizes}
            ok = len(s.fibers) == want_images and sizes == [want_fiber]
            report.add(
                f"projection/t4/side{side}/pos{pos}",
                f"{want_images} images, every fiber of size {want_fiber}",
                obs,
                ok,
            )
            lift_bad = 0
            balance_bad = 0
            for image in s.fibers:
                variant = 0 if side % 4 == 3 else None
                back = project(make_deficient_square(side, (pos - 1, pos - 1)), lift(image, side, pos, LiftChoices(variant)))
                lift_bad += back != image
                balance_bad += diagonal_balance(image) != (m, m)
            report.add(f"project-lift/t4/side{side}/pos{pos}", "project(lift(x)) = x", {"mismatches": lift_bad}, lift_bad == 0)
            report.add(f"image-balance/t4/side{side}/pos{pos}", f"diagonal balance ({m}, {m})", {"mismatches": balance_bad}, balance_bad == 0)
        region = make_deficient_square(side, (admissible_positions(side)[0] - 1,) * 2)
        lp_bad = 0
        checked = 0
        for t in enumerate_tilings(region, TileSet.RIBBON_T4):
            image = project(region, t)
            again = lift(image, side, region.missing.row + 1, read_choices(region, t))
            lp_bad += again != t
            checked += 1
        report.add(f"lift-project/t4/side{side}", "lift(project(t), choices(t)) = t", {"tilings": checked, "mismatches": lp_bad}, lp_bad == 0)


def _fibers(report, sides):
    for side in sides:
        for pos in admissible_positions(side):
            s = analyze_square(side, pos, TileSet.RIBBON_T4_PLUS)
            bad = sum(1 for image, n in s.fibers.items() if n != preimage_cardinality(image, side))
            by_k: Counter = Counter()
            for image, n in s.fibers.items():
                by_k[len(image.diagonal_monomers)] += 1
            obs = {
                "images": len(s.fibers),
                "tilings": s.tilings,
                "bad_fibers": bad,
                "errors": dict(sorted(s.structure_errors.items())),
                "images_by_k": {str(k): v for k, v in sorted(by_k.items())},
            }
            factor = "2 * 2^k" if side % 4 == 3 else "2^k"
            report.add(
                f"fibers/t4plus/side{side}/pos{pos}",
                f"fiber size {factor} (k = diagonal monomers)",
                obs,
                bad == 0 and not s.structure_errors and s.tilings == sum(s.fibers.values()),
            )


def _weighted_deficient(size: int, pos: int) -> int:
    """Sum of 2^k over domino+monomer tilings of the board minus diagonal cell ``pos``."""
    counts = _profile_counts(size, size, frozenset([(pos - 1, pos - 1)]), monomers=True)
    return sum((1 << k) * n for k, n in enumerate(counts))


def _weighted_sum_probe(report, threads, full):
    prof = diagonal_profile(2)
    n_k1 = sum((1 << k) * prof.counts[k] for k in range(1, 3))
    n_k0 = n_k1 + prof.counts[0]
    for pos in admissible_positions(5):
        got = count_tilings(make_deficient_square(5, (pos - 1, pos - 1)), TileSet.RIBBON_T4_PLUS, threads=threads)
        match = "k>=1" if got == n_k1 else "k>=0" if got == n_k0 else "neither"
        report.add(
            f"weighted-sum-index/t4plus/side5/pos{pos}",
            f"sum from k=1 is {n_k1}, sum from k=0 is {n_k0}",
            {"count": got, "matches": match},
            None,
        )
    sides = [(7, 1), (9, 2)] + ([(11, 2)] if full else [])
    for side, m in sides:
        lo, hi = capital_N(m), capital_N(m, include_k0=True)
        for pos in admissible_positions(side):
            got = count_tilings(make_deficient_square(side, (pos - 1, pos - 1)), TileSet.RIBBON_T4_PLUS, threads=threads)
            obs = {"count": got}
            if side % 4 == 3:
                obs["twice_N_from_k1"] = 2 * lo
                obs["twice_N_from_k0"] = 2 * hi
                obs["twice_weighted_deficient_board"] = 2 * _weighted_deficient(2 * m + 1, pos // 2)
                text = f"2N({m}) = {2 * lo} or {2 * hi}, the same at every position"
            else:
                obs["N_from_k1"] = lo
                obs["N_from_k0"] = hi
                text = f"N({m}) = {lo} or {hi}"
            report.add(f"position-independence/t4plus/side{side}/pos{pos}", text, obs, None)


def _t4plus_records(report, sides):
    for side in sides:
        total = unequal = 0
        for pos in admissible_positions(side):
            s = analyze_square(side, pos, TileSet.RIBBON_T4_PLUS)
            total += s.tilings
            unequal += s.unequal_area
        report.add(
            f"equal-area/t4plus/side{side}",
            "not claimed for T4+; measured",
            {"tilings": total, "unequal_halves": unequal},
            None,
        )


def _nonexistence(report, threads, limit=9):
    for p in range(3, limit + 1):
        for q in range(3, limit + 1):
            if (p * q) % 4 != 1:
                continue
            wrong = []
            missing_ok = []
            for r in range(p):
                for c in range(q):
                    region = Region.deficient_rectangle(p, q, (r, c))
                    got = count_tilings(region, TileSet.RIBBON_T4, threads=threads)
                    allowed = p == q and r == c and (r + 1) in admissible_positions(p)
                    if allowed and got == 0:
                        missing_ok.append([r, c])
                    if not allowed and got != 0:
                        wrong.append([r, c, got])
            report.add(
                f"nonexistence/t4/{p}x{q}",
                "zero tilings unless odd square with the missing cell at an admissible diagonal position",
                {"nonzero_forbidden": wrong, "zero_admissible": missing_ok},
                not wrong and not missing_ok,
            )


def _propagation(report, sides):
    for side in sides:
        checked = bad = 0
        for pos in admissible_positions(side):
            region = make_deficient_square(side, (pos - 1, pos - 1))
            for t in enumerate_tilings(region, TileSet.RIBBON_T4):
                try:
                    big_region, big = propagate(region, t)
                    problems = propagation_checks(region, t, big_region, big)
                except ValueError:
                    problems = ["raised"]
                checked += 1
                bad += bool(problems)
        report.add(f"propagation/t4/side{side}", f"every tiling extends to side {side + 4}", {"tilings": checked, "failures": bad}, bad == 0)
    region = make_deficient_square(5, (0, 0))
    tiling = next(enumerate_tilings(region, TileSet.RIBBON_T4))
    steps = []
    for _ in range(2):
        new_region, new_tiling = propagate(region, tiling)
        steps.append(not propagation_checks(region, tiling, new_region, new_tiling))
        region, tiling = new_region, new_tiling
    report.add("propagation/t4/chain-5-9-13", "5 -> 9 -> 13 stays valid", {"steps_ok": steps}, all(steps))


def _sections(full: bool, threads: int, golden: dict) -> list:
    """``(criterion, runner)`` pairs in report order."""
    t4_sides = (5, 7, 9, 11, 13) if full else (5, 7, 9, 11)

    def census(report):
        _census(report, TileSet.RIBBON_T4, (5, 7, 9, 11))
        _census(report, TileSet.RIBBON_T4_PLUS, (5, 7, 9))

    def records(report):
        _weighted_sum_probe(report, threads, full)
        _t4plus_records(report, (5, 7, 9))

    return [
        (1, lambda r: _golden_counts(r, threads, golden)),
        (2, _dimer_triangle),
        (3, lambda r: _cross_law(r, threads, (5, 7, 9, 11))),
        (4, lambda r: _structure(r, t4_sides)),
        (5, census),
        (6, lambda r: _bijection(r, (5, 7, 9, 11))),
        (7, lambda r: _fibers(r, (5, 7, 9))),
        (8, records),
        (9, lambda r: _nonexistence(r, threads)),
        (10, lambda r: _propagation(r, (5, 7))),
    ]


def run_suite(
    suite: str = "quick",
    threads: int = 1,
    golden: Optional[dict] = None,
    criteria: Optional[tuple] = None,
) -> VerificationReport:
    """Run the claims of ``suite``.

    ``golden`` replaces the built-in count table and ``criteria`` restricts
    the run to the numbered acceptance criteria listed.
    """
    if suite not in ("quick", "full"):
        raise ValueError(f"unknown suite {suite!r}")
    full = suite == "full"
    start = time.perf_counter()
    report = VerificationReport(suite)
    if golden is None:
        golden = dict(GOLDEN_T4)
        if full:
            golden.update(GOLDEN_T4_FULL)
    for number, runner in _sections(full, threads, golden):
        if criteria is None or number in criteria:
            runner(report)
    report.runtime = time.perf_counter() - start
    return report


def clear_cache() -> None:
    _SUMMARIES.clear()
