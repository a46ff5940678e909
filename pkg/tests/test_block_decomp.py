import pytest
from hypothesis import given, strategies as st

from schur_crystal.block_decomp import (
    balance,
    block_members,
    characterize_window,
    decompose,
    directcalc_check,
    first_zero,
    minus_window,
    plus_window,
    recompose,
    window,
    zigzag_minus_check,
    zigzag_plus_check,
)
from schur_crystal.partitions import subsets_in_window
from schur_crystal.sp_class import NotInClassError, in_sp
from oracles import sp_definition


def test_windows():
    assert window(5, 1) == (3, 7)
    assert plus_window(5, 1) == (6, 7)
    assert minus_window(5, 1) == (3, 4)


def test_decompose_examples():
    assert decompose((5, 5), 5, 1) == ((7, 6), (4, 3))
    assert decompose((), 7, 2) == ((), ())
    assert balance((5, 5), 5, 1) == [2, 1, 0]
    assert first_zero([2, 1, 0]) == 2


def test_recompose_examples():
    assert recompose((7, 6), (4, 3), 5, 1) == (5, 5)
    assert recompose((), (), 7, 1) == ()
    # 6,4 is not a member (6 = 5+1 above 4 = 5-1), so the pair (6),(4) comes from 5
    assert recompose((6,), (4,), 5, 1) == (5,)
    assert decompose((5,), 5, 1) == ((6,), (4,))


def test_decompose_rejects_nonmembers():
    with pytest.raises(NotInClassError):
        decompose((6, 4), 5, 1)


def test_characterize_examples():
    assert not characterize_window((8, 6), 7, 1)
    assert characterize_window((), 5, 1)


def window_candidates(p, j):
    """p-strict partitions in the window: a subset of the other values plus copies of jp."""
    lo, hi = window(p, j)
    for base in subsets_in_window(lo, hi):
        if j * p in base:
            continue
        for copies in range(0, p):
            yield tuple(sorted(list(base) + [j * p] * copies, reverse=True))


@pytest.mark.parametrize("p", [3, 5, 7, 9])
@pytest.mark.parametrize("j", [1, 2, 3])
def test_characterization_exhaustive(p, j):
    checked = 0
    for lam in window_candidates(p, j):
        assert characterize_window(lam, p, j) == in_sp(lam, p), lam
        checked += 1
    assert checked == p * 2 ** (p - 1)


def test_zigzag_examples():
    assert zigzag_plus_check((), (), 5, 1) == (True, True)
    a, b = zigzag_plus_check((5, 5), (12, 9), 5, 1)
    assert a == b


def test_directcalc_examples():
    assert directcalc_check((5, 5), 5, 1)
    assert directcalc_check((), 7, 2)


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("j", [1, 2])
def test_directcalc_exhaustive(p, j):
    assert all(directcalc_check(lam, p, j) for lam in block_members(p, j))


@pytest.mark.parametrize("p", [3, 5, 7, 9])
@pytest.mark.parametrize("j", [1, 2])
def test_block_members_are_window_members(p, j):
    expected = {lam for lam in window_candidates(p, j) if sp_definition(lam, p)}
    assert set(block_members(p, j)) == expected


block_strategy = st.sampled_from([3, 5, 7, 9]).flatmap(
    lambda p: st.tuples(st.just(p), st.integers(1, 3)).flatmap(
        lambda pj: st.tuples(st.just(pj[0]), st.just(pj[1]), st.sampled_from(block_members(*pj)))
    )
)


@given(block_strategy)
def test_round_trip_property(data):
    p, j, lam = data
    plus, minus = decompose(lam, p, j)
    assert recompose(plus, minus, p, j) == lam
    lo, hi = plus_window(p, j)
    assert all(lo <= x <= hi for x in plus)
    lo, hi = minus_window(p, j)
    assert all(lo <= x <= hi for x in minus)


@given(st.sampled_from([5, 7]), st.integers(1, 2), st.data())
def test_zigzag_property(p, j, data):
    lam = data.draw(st.sampled_from(block_members(p, j)))
    mu = data.draw(st.sampled_from(block_members(p, j + 1)))
    a, b = zigzag_plus_check(lam, mu, p, j)
    assert a == b
    if j >= 2:
        nu = data.draw(st.sampled_from(block_members(p, j - 1)))
        x, y, z = zigzag_minus_check(lam, nu, p, j)
        assert x == y == z
