import pytest
from hypothesis import given, settings, strategies as st

from ribbontile.dimers import (
    _profile_counts,
    DimerError,
    OddSide,
    PositionOutOfRange,
    capital_N,
    central_binomial,
    count_dimer_deficient,
    count_dimer_rectangle,
    count_dimer_tilings,
    count_monomer_dimer_tilings,
    diagonal_profile,
    kasteleyn_closed_form,
)
from ribbontile.oracles import count_monomer_dimer, count_perfect_matchings


def board(h, w, drop=()):
    return [(r, c) for r in range(h) for c in range(w) if (r, c) not in drop]


@pytest.mark.parametrize("n,want", [(2, 2), (4, 36), (6, 6728), (8, 12988816)])
def test_square_boards(n, want):
    assert count_dimer_tilings(n) == want
    assert kasteleyn_closed_form(n) == want


@pytest.mark.parametrize("n", [2, 4, 6])
def test_triangle_with_brute_force(n):
    assert count_perfect_matchings(board(n, n)) == count_dimer_tilings(n) == kasteleyn_closed_form(n)


def test_closed_form_keeps_every_digit():
    # far more digits than the starting precision
    assert kasteleyn_closed_form(16) == count_dimer_tilings(16)
    assert len(str(kasteleyn_closed_form(30))) > 60


@pytest.mark.parametrize("n,want", [(3, (4, 2, 4)), (5, (192, 112, 196, 112, 192))])
def test_deficient_boards(n, want):
    assert tuple(count_dimer_deficient(n, p) for p in range(1, n + 1)) == want


@pytest.mark.parametrize("p", [1, 2, 3])
def test_deficient_against_brute_force(p):
    assert count_dimer_deficient(3, p) == count_perfect_matchings(board(3, 3, {(p - 1, p - 1)}))


@pytest.mark.parametrize("n,want", [(2, (2, 4, 1)), (4, (912, 3424, 3912, 1568, 196))])
def test_diagonal_profile(n, want):
    prof = diagonal_profile(n)
    assert prof.counts == want
    assert list(prof.counts) == count_monomer_dimer(board(n, n))
    assert prof.to_json() == {"n": n, "N": list(want)}


def test_weighted_sums():
    assert capital_N(1) == 12 and capital_N(1, include_k0=True) == 14
    assert capital_N(2) == 38176 and capital_N(2, include_k0=True) == 39088
    assert [central_binomial(m) for m in range(4)] == [1, 2, 6, 20]


@settings(max_examples=30, deadline=None)
@given(st.integers(1, 4), st.integers(1, 5))
def test_two_monomer_dimer_counters_agree(h, w):
    by_profile = sum(_profile_counts(h, w, monomers=True))
    assert count_monomer_dimer_tilings(h, w) == by_profile == sum(count_monomer_dimer(board(h, w)))


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5), st.data())
def test_rectangles_with_holes(h, w, data):
    holes = data.draw(st.sets(st.sampled_from(board(h, w)), max_size=3))
    assert count_dimer_rectangle(h, w, holes) == count_perfect_matchings(board(h, w, holes))


def test_errors():
    with pytest.raises(OddSide):
        count_dimer_tilings(5)
    with pytest.raises(OddSide):
        kasteleyn_closed_form(3)
    with pytest.raises(PositionOutOfRange):
        count_dimer_deficient(3, 4)
    with pytest.raises(DimerError):
        capital_N(0)
