import pytest
from hypothesis import given, strategies as st

from schur_crystal.partitions import restrict
from schur_crystal.sp_class import (
    NotInClassError,
    check_andrews_containment,
    check_window_counts,
    count_sp,
    enumerate_sp,
    in_sp,
    in_sp_compact,
    in_sp_minimal,
    sp_class,
    sp_local_check,
    sp_window_members,
)
from schur_crystal.classes import count_distinct_avoiding
from oracles import all_partitions, enumerate_sp_oracle, sp_definition


@pytest.mark.parametrize(
    "lam, p, expected",
    [
        ((8, 6), 7, False),
        ((), 7, True),
        ((4, 3), 7, False),
        ((7, 7, 7), 7, True),
        ((16, 15, 12, 8, 7), 7, False),
        # adjacent parts 14 and 7 meet no rule; the 14..7 pattern needs distance 3
        ((14, 7), 7, True),
        # contains 5,*,2
        ((5, 4, 2), 7, False),
        ((9, 6, 5), 7, False),
        ((6, 4), 5, False),
        ((5, 5), 5, True),
    ],
)
def test_membership_examples(lam, p, expected):
    assert in_sp(lam, p) is expected
    assert in_sp_minimal(lam, p) is expected
    assert in_sp_compact(lam, p) is expected
    assert sp_definition(lam, p) is expected


@pytest.mark.parametrize("p", [3, 5, 7, 9, 11])
def test_three_forms_agree(p):
    for n in range(19):
        for lam in all_partitions(n):
            a = in_sp(lam, p)
            assert a == in_sp_minimal(lam, p) == in_sp_compact(lam, p) == sp_local_check(lam, p), lam


@pytest.mark.parametrize("p", [3, 5, 7, 9])
def test_enumeration_against_oracle(p):
    for n in range(21):
        assert set(enumerate_sp(p, n)) == enumerate_sp_oracle(p, n)


def test_small_counts():
    assert list(enumerate_sp(3, 0)) == [()]
    assert set(enumerate_sp(3, 6)) == {(6,), (5, 1)}
    assert len(list(enumerate_sp(7, 10))) == 8


@pytest.mark.parametrize("p", [3, 5, 7, 9, 11])
def test_counts_match_distinct_avoiding(p):
    assert count_sp(p, 50) == count_distinct_avoiding(p, 50)


def test_window_counts_examples():
    assert check_window_counts((7, 7, 7), 7)
    assert check_window_counts((), 5)
    with pytest.raises(NotInClassError):
        check_window_counts((8, 6), 7)


def test_andrews_examples():
    assert check_andrews_containment((), 3)
    assert check_andrews_containment((7, 7, 7), 7)
    with pytest.raises(NotInClassError):
        check_andrews_containment((5, 4, 2), 7)


def test_window_members():
    # multiples of p excluded from these windows, so strict and p-strict coincide
    assert len(sp_window_members(7, 1, 6)) == 35
    assert sorted(sp_window_members(5, 6, 7)) == [(), (6,), (7,), (7, 6)]


@pytest.mark.parametrize("p", [3, 5, 7])
def test_incremental_extension_matches_contains(p):
    cls = sp_class(p)
    for n in range(16):
        for lam in enumerate_sp(p, n):
            last = lam[-1] if lam else 20
            for x in range(1, last + 1):
                assert cls.extend_ok(lam, x) == cls.contains(lam + (x,)), (lam, x)


sp5 = st.integers(0, 30).flatmap(lambda n: st.sampled_from(sorted(enumerate_sp(5, n))))


@given(sp5, st.integers(-3, 35), st.integers(0, 35))
def test_restriction_closure(lam, a, width):
    assert in_sp(restrict(lam, a, a + width), 5)
