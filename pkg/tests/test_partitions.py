import pytest
from hypothesis import given, strategies as st

from schur_crystal.partitions import (
    OddModulus,
    Partition,
    format_partition,
    matches_subpattern,
    multiplicity,
    parse_partition,
    partitions_of,
    reflect,
    restrict,
    shift,
    strict_partitions_of,
    subsets_in_window,
)
from oracles import all_partitions, distinct_partitions, window_subsets

partitions = st.lists(st.integers(1, 30), max_size=8).map(lambda xs: tuple(sorted(xs, reverse=True)))


def test_multiplicity():
    assert multiplicity((5, 5, 2), 5) == 2
    assert multiplicity((), 3) == 0
    assert multiplicity((7, 4, 4, 1), 4) == 2


def test_shift():
    assert shift((6, 3), 3, 1) == (9, 6)
    assert shift((), 5, 7) == ()
    with pytest.raises(ValueError):
        shift((6, 3), 3, -1)


def test_subpattern():
    assert matches_subpattern((9, 6, 3), (6, 3))
    assert not matches_subpattern((9, 6, 3), (9, 3))
    assert matches_subpattern((9, 6, 3), ())


def test_restrict():
    assert restrict((9, 6, 3, 1), 3, 6) == (6, 3)
    assert restrict((9, 6, 3, 1), -2, 2) == (1,)
    assert restrict((), 1, 100) == ()
    with pytest.raises(ValueError):
        restrict((3,), 5, 2)


def test_reflect():
    assert reflect((6, 3), 7, 1) == (4, 1)
    assert reflect((), 5, 2) == ()
    assert reflect((4, 3), 5, 1) == (2, 1)
    with pytest.raises(ValueError):
        reflect((7,), 7, 1)


def test_partition_validation():
    assert Partition([3, 1]).size == 4
    assert Partition([3, 1]).part(1) == 3
    with pytest.raises(ValueError):
        Partition([1, 3])
    with pytest.raises(ValueError):
        Partition([2, 0])


def test_modulus():
    m = OddModulus(7)
    assert m.h == 3
    assert [m.block_of(x) for x in (3, 4, 10, 11)] == [0, 1, 1, 2]
    for bad in (4, 1, 0):
        with pytest.raises(ValueError):
            OddModulus(bad)


def test_text_round_trip():
    assert format_partition((9, 6, 3)) == "9,6,3"
    assert format_partition(()) == ""
    assert parse_partition("9,6,3") == (9, 6, 3)
    assert parse_partition("") == ()
    with pytest.raises(ValueError):
        parse_partition("3,x")


@pytest.mark.parametrize("n", range(0, 16))
def test_enumerators_match_oracle(n):
    assert list(partitions_of(n)) == list(all_partitions(n))
    assert list(strict_partitions_of(n)) == list(distinct_partitions(n))


def test_window_subsets():
    assert sorted(subsets_in_window(-1, 4)) == sorted(window_subsets(-1, 4))
    assert len(list(subsets_in_window(6, 9))) == 16


@given(partitions, st.integers(1, 9), st.integers(0, 3))
def test_shift_inverts(lam, a, k):
    assert shift(shift(lam, a, k), a, -k) == lam


@given(partitions, st.integers(-5, 35), st.integers(0, 40))
def test_restrict_keeps_window(lam, a, width):
    b = a + width
    r = restrict(lam, a, b)
    assert all(a <= x <= b for x in r)
    assert sorted(r) == sorted(x for x in lam if a <= x <= b)


@given(partitions, st.sampled_from([3, 5, 7]))
def test_reflect_involution(lam, p):
    k = (lam[0] // p + 1) if lam else 1
    assert reflect(reflect(lam, p, k), p, k) == lam
