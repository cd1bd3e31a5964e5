from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from ribbontile.dimers import count_dimer_deficient, count_dimer_tilings
from ribbontile.geometry import admissible_positions, make_deficient_square
from ribbontile.projection import (
    ImageTiling,
    InconsistentImage,
    LiftChoices,
    diagonal_balance,
    image_missing,
    lift,
    preimage_cardinality,
    project,
    read_choices,
)
from ribbontile.solver import enumerate_tilings
from ribbontile.tiles import TileSet

T4 = TileSet.RIBBON_T4
T4P = TileSet.RIBBON_T4_PLUS


def _fibers(side, pos, tileset):
    region = make_deficient_square(side, (pos - 1, pos - 1))
    return region, Counter(project(region, t) for t in enumerate_tilings(region, tileset))


def test_hand_transcribed_example_projects(side11_example):
    region, tiling = side11_example
    image = project(region, tiling)
    assert image.size == 5 and image.missing == (1, 1)
    assert len(image.dominoes) == 12 and not image.monomers
    assert diagonal_balance(image) == (2, 2)
    assert lift(image, 11, 4, read_choices(region, tiling)) == tiling


@pytest.mark.parametrize("side", [5, 9])
def test_bijection_on_4m_plus_1(side):
    m = (side - 1) // 4
    for pos in admissible_positions(side):
        _, fibers = _fibers(side, pos, T4)
        assert len(fibers) == count_dimer_tilings(2 * m)
        assert set(fibers.values()) == {1}


@pytest.mark.parametrize("side", [7, 11])
def test_double_cover_on_4m_plus_3(side):
    m = (side - 3) // 4
    for pos in admissible_positions(side):
        _, fibers = _fibers(side, pos, T4)
        assert len(fibers) == count_dimer_deficient(2 * m + 1, pos // 2)
        assert set(fibers.values()) == {2}
        assert all(img.missing == image_missing(side, pos) for img in fibers)


@pytest.mark.parametrize("side,pos", [(5, 3), (7, 2), (9, 1)])
def test_lift_inverts_project(side, pos):
    region, fibers = _fibers(side, pos, T4)
    variant = 0 if side % 4 == 3 else None
    for image in fibers:
        assert project(region, lift(image, side, pos, LiftChoices(variant))) == image
    for t in enumerate_tilings(region, T4):
        assert lift(project(region, t), side, pos, read_choices(region, t)) == t


@pytest.mark.parametrize("side", [5, 7])
def test_t4plus_fibers_are_powers_of_two(side):
    for pos in admissible_positions(side):
        _, fibers = _fibers(side, pos, T4P)
        for image, n in fibers.items():
            assert n == preimage_cardinality(image, side)


def test_t4plus_lift_uses_monomer_sides():
    region = make_deficient_square(5, (2, 2))
    for t in enumerate_tilings(region, T4P):
        choices = read_choices(region, t)
        image = project(region, t)
        assert set(choices.monomer_sides) == set(image.diagonal_monomers)
        assert lift(image, 5, 3, choices) == t


def test_lift_rejects_wrong_choices():
    region, fibers = _fibers(7, 4, T4)
    image = next(iter(fibers))
    with pytest.raises(InconsistentImage):
        lift(image, 7, 4)
    with pytest.raises(InconsistentImage):
        lift(image, 9, 5, LiftChoices(0))
    region, fibers = _fibers(5, 1, T4)
    with pytest.raises(InconsistentImage):
        lift(next(iter(fibers)), 5, 1, LiftChoices(1))


def test_defective_image_rejected():
    bad = ImageTiling(2, None, (((0, 0), (1, 1)),), ())
    assert bad.defects()
    with pytest.raises(InconsistentImage):
        lift(bad, 5, 1)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([(5, 1), (5, 3), (7, 2), (7, 6), (9, 7)]), st.data())
def test_image_json_round_trip(case, data):
    side, pos = case
    region = make_deficient_square(side, (pos - 1, pos - 1))
    tilings = list(enumerate_tilings(region, T4, limit=40))
    t = data.draw(st.sampled_from(tilings))
    image = project(region, t)
    assert ImageTiling.from_json(image.dumps()) == image
    assert image.defects() == []
