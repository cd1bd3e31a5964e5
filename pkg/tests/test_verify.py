import json

from ribbontile.verify import FAIL, PASS, RECORDED, GOLDEN_T4, VerificationReport, _weighted_sum_probe, run_suite


def test_corrupted_golden_count_fails():
    golden = {5: {1: 2, 3: 3}}
    report = run_suite("quick", golden=golden, criteria=(1,))
    statuses = {c.claim_id: c.status for c in report.claims}
    assert statuses == {"golden/t4/side5/pos1": PASS, "golden/t4/side5/pos3": FAIL}
    assert report.exit_code == 1


def test_golden_table_passes():
    report = run_suite("quick", golden={k: v for k, v in GOLDEN_T4.items() if k <= 9}, criteria=(1, 2))
    assert report.exit_code == 0
    assert report.summary()[PASS] == len(report.claims)


def test_weighted_sum_probe_is_recorded():
    report = VerificationReport("quick")
    _weighted_sum_probe(report, threads=1, full=False)
    probe = [c for c in report.claims if c.claim_id.startswith("weighted-sum-index/")]
    assert len(probe) == 3
    for c in probe:
        assert c.status == RECORDED
        assert c.observed == {"count": 14, "matches": "k>=0"}
    assert report.exit_code == 0


def test_report_json_has_no_runtime():
    report = VerificationReport("quick")
    report.add("a", "x", 1, True)
    report.add("b", "y", [1, 2], None)
    report.runtime = 12.5
    obj = json.loads(report.dumps())
    assert "runtime" not in json.dumps(obj)
    assert obj["summary"] == {"pass": 1, "fail": 0, "recorded": 1}
    assert report.lines()[-1].startswith("1 passed, 0 failed, 1 recorded")
