"""The eleven acceptance criteria, one test each.

Every test appends a PASS/FAIL line to ``RESULTS``; the lines are printed
in the pytest terminal summary, or directly when this file is run as a
script (``python tests/test_acceptance.py``).
"""

import json
import time

from ribbontile.verify import FAIL, GOLDEN_T4, RECORDED, clear_cache, run_suite

RESULTS: dict = {}
CLAIMS: dict = {}

TITLES = {
    1: "golden T4 counts, sides 5-11",
    2: "dimer oracle triangle, boards 2/4/6",
    3: "cross-law identities with domino counts",
    4: "crack structure on every T4 tiling, sides 5-11",
    5: "weighted crack census, T4 and T4+",
    6: "bijection and double cover of the projection",
    7: "T4+ fibers of size 2^k",
    8: "weighted-sum index probe (recorded)",
    9: "nonexistence sweep, deficient rectangles up to 9x9",
    10: "propagation by four, 5x5 and 7x7 plus chain",
    11: "determinism across runs and thread counts",
}


def _record(number: int, ok: bool, detail: str) -> None:
    RESULTS[number] = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {TITLES[number]} ({detail})"


def _criterion(number: int, budget: float, **kw):
    start = time.perf_counter()
    report = run_suite("quick", criteria=(number,), **kw)
    elapsed = time.perf_counter() - start
    CLAIMS[number] = report.to_json()["claims"]
    failed = [c.claim_id for c in report.claims if c.status == FAIL]
    ok = bool(report.claims) and not failed and elapsed < budget
    detail = f"{len(report.claims)} claims, {len(failed)} failed, {elapsed:.1f}s of {budget:.0f}s"
    if failed:
        detail += f"; first failure {failed[0]}"
    _record(number, ok, detail)
    return report, elapsed, failed


def test_criterion_01_golden_counts():
    small = {k: v for k, v in GOLDEN_T4.items() if k <= 9}
    start = time.perf_counter()
    r_small = run_suite("quick", criteria=(1,), golden=small)
    t_small = time.perf_counter() - start
    start = time.perf_counter()
    r_big = run_suite("quick", criteria=(1,), golden={11: GOLDEN_T4[11]})
    t_big = time.perf_counter() - start
    claims = r_small.claims + r_big.claims
    CLAIMS[1] = [c.to_json() for c in claims]
    failed = [c.claim_id for c in claims if c.status == FAIL]
    ok = not failed and t_small < 1.0 and t_big < 60.0
    _record(1, ok, f"{len(claims)} claims, {len(failed)} failed, sides<=9 {t_small:.2f}s, side 11 {t_big:.1f}s")
    assert not failed, failed
    assert t_small < 1.0 and t_big < 60.0


def test_criterion_02_dimer_triangle():
    _, elapsed, failed = _criterion(2, 1.0)
    assert not failed and elapsed < 1.0


def test_criterion_03_cross_law():
    _, _, failed = _criterion(3, 60.0)
    assert not failed, failed


def test_criterion_04_structure():
    clear_cache()
    _, elapsed, failed = _criterion(4, 90.0)
    assert not failed, failed
    assert elapsed < 90.0


def test_criterion_05_census():
    _, _, failed = _criterion(5, 300.0)
    assert not failed, failed


def test_criterion_06_bijection():
    _, _, failed = _criterion(6, 300.0)
    assert not failed, failed


def test_criterion_07_fibers():
    _, _, failed = _criterion(7, 300.0)
    assert not failed, failed


def test_criterion_08_weighted_sum_probe():
    report, _, failed = _criterion(8, 300.0)
    probe = [c for c in report.claims if c.claim_id.startswith("weighted-sum-index/")]
    resolved = all(c.status == RECORDED and c.observed["matches"] in ("k>=1", "k>=0") for c in probe)
    side7 = [c for c in report.claims if c.claim_id.startswith("position-independence/t4plus/side7/")]
    ok = len(probe) == 3 and resolved and len(side7) == 3 and not failed
    matches = sorted({c.observed["matches"] for c in probe})
    _record(8, ok, f"5x5 count matches the {'/'.join(matches)} sum at every position; {len(report.claims)} recorded")
    assert ok


def test_criterion_09_nonexistence():
    _, elapsed, failed = _criterion(9, 300.0)
    assert not failed, failed
    assert elapsed < 300.0


def test_criterion_10_propagation():
    _, elapsed, failed = _criterion(10, 30.0)
    assert not failed, failed
    assert elapsed < 30.0


def test_criterion_11_determinism():
    for n in range(1, 11):
        if n not in CLAIMS:
            CLAIMS[n] = run_suite("quick", criteria=(n,)).to_json()["claims"]
    first = json.dumps([c for n in range(1, 11) for c in CLAIMS[n]], sort_keys=True)
    clear_cache()
    again = run_suite("quick", threads=2)
    second = json.dumps(again.to_json()["claims"], sort_keys=True)
    ok = first == second and again.dumps() == again.dumps()
    _record(11, ok, f"threads 1 and 2 give byte-identical claims: {first == second}")
    assert ok


if __name__ == "__main__":
    import sys

    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    for t in tests:
        try:
            t()
        except AssertionError:
            pass
    for n in sorted(RESULTS):
        print(RESULTS[n])
    sys.exit(0 if all(line.startswith("PASS") for line in RESULTS.values()) else 1)
