from math import comb

import pytest

from ribbontile.geometry import Region, admissible_positions, make_deficient_square
from ribbontile.solver import Tiling, enumerate_tilings
from ribbontile.structure import (
    InvalidTiling,
    NotDeficientSquare,
    Side,
    block_side,
    crack_census,
    decompose,
    expected_irregular_count,
    extract_crack,
    validate_crack,
    window_balance,
)
from ribbontile.tiles import TileSet

T4 = TileSet.RIBBON_T4
T4P = TileSet.RIBBON_T4_PLUS


def test_alignment_on_odd_squares():
    region = make_deficient_square(7, (1, 1))
    assert block_side(region, (1, 0)) is Side.LOWER
    assert block_side(region, (0, 1)) is Side.UPPER
    assert block_side(region, (0, 0)) is None
    assert block_side(region, (1, 1)) is None


def test_hand_transcribed_example(side11_example):
    region, tiling = side11_example
    dec = decompose(region, tiling)
    assert len(dec.rect_blocks) == 12 and not dec.square_blocks
    assert len(dec.irregular) == 6 == expected_irregular_count(11)
    report = extract_crack(region, tiling, dec)
    verdict = validate_crack(report, 11)
    assert verdict.ok, verdict.diagnostics
    assert [len(c) for c in report.components] == [48, 48]
    balance = window_balance(report)
    assert (balance[Side.LOWER], balance[Side.UPPER], balance[Side.MISSING_CENTER]) == (2, 2, 1)


@pytest.mark.parametrize("side", [5, 7, 9])
def test_every_t4_tiling_has_a_valid_crack(side):
    m = (side - 1) // 4 if side % 4 == 1 else (side - 3) // 4
    for pos in admissible_positions(side):
        region = make_deficient_square(side, (pos - 1, pos - 1))
        for t in enumerate_tilings(region, T4):
            report = extract_crack(region, t)
            verdict = validate_crack(report, side)
            assert verdict.ok, verdict.diagnostics
            wb = window_balance(report)
            assert wb[Side.LOWER] == wb[Side.UPPER] == m
            assert wb[Side.NONE] == 0


@pytest.mark.parametrize("side,want", [(5, 2), (7, 4), (9, 6)])
def test_t4_census(side, want):
    m = (side - 1) // 4 if side % 4 == 1 else (side - 3) // 4
    assert want == comb(2 * m, m) * (2 if side % 4 == 3 else 1)
    for pos in admissible_positions(side):
        census = crack_census(make_deficient_square(side, (pos - 1, pos - 1)), T4)
        assert census.weighted_cracks == want


@pytest.mark.parametrize("side,want", [(5, 4), (7, 8)])
def test_t4plus_census(side, want):
    for pos in admissible_positions(side):
        census = crack_census(make_deficient_square(side, (pos - 1, pos - 1)), T4P)
        assert census.weighted_cracks == want


def test_t4plus_cracks_keep_location_and_count():
    # equal halves are not claimed for the square tile; everything else is
    for pos in admissible_positions(7):
        region = make_deficient_square(7, (pos - 1, pos - 1))
        for t in enumerate_tilings(region, T4P):
            verdict = validate_crack(extract_crack(region, t), 7, T4P)
            assert not verdict.equal_area_asserted
            assert verdict.ok, verdict.diagnostics


def test_census_json_is_sorted():
    census = crack_census(make_deficient_square(7, (3, 3)), T4)
    obj = census.to_json()
    keys = [c["cells"] for c in obj["cracks"]]
    assert keys == sorted(keys)
    assert obj["distinct_cracks"] == 2 and obj["weighted_cracks"] == 4


def test_rejects_bad_input():
    region = make_deficient_square(5, (0, 0))
    with pytest.raises(InvalidTiling):
        decompose(region, Tiling(()))
    with pytest.raises(NotDeficientSquare):
        extract_crack(Region.full(4, 4), Tiling(()))
