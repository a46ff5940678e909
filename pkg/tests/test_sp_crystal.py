import pytest
from hypothesis import given, strategies as st

from schur_crystal.partitions import union
from schur_crystal.precrystal import reachable
from schur_crystal.sp_class import enumerate_sp, in_sp, sp_window_members
from schur_crystal.sp_crystal import (
    SpCrystal,
    block_factorize,
    block_unfactorize,
    concat_block,
    minus_block,
    one_box_audit,
    plus_block,
    sp_graph,
    sp_lower,
    sp_lower_rebracketed,
    sp_raise,
)


def test_block_examples():
    assert plus_block(5, 1).f((), 0) == (6,)
    assert minus_block(5, 1).f((4,), 1) is None
    assert minus_block(5, 1).e((4,), 1) == (3,)
    assert concat_block(5, 1).f((2,), 2) == (3,)
    assert concat_block(5, 1).e((3,), 2) == (2,)
    assert concat_block(5, 1).f((), 2) is None


def test_lowering_examples():
    assert sp_lower((), 5, 0) == (1,)
    assert sp_lower((4,), 5, 0) == (5,)
    chain = [()]
    for i in range(3):
        chain.append(sp_lower(chain[-1], 5, i))
    assert chain == [(), (1,), (2,), (3,)]


def test_raising_examples():
    assert sp_raise((1,), 5, 0) == ()
    assert sp_raise((5,), 5, 0) == (4,)
    assert all(sp_raise((), 5, i) is None for i in range(3))


def test_rejects_nonmembers():
    with pytest.raises(ValueError):
        sp_lower((8, 6), 7, 0)


def test_factorize():
    assert block_factorize((), 5) == [()]
    pieces = block_factorize((5, 5), 5)
    assert block_unfactorize(pieces, 5) == (5, 5)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_factorize_round_trip(p):
    for n in range(20):
        for lam in enumerate_sp(p, n):
            assert block_unfactorize(block_factorize(lam, p), p) == lam


def test_graph_small():
    g = sp_graph(3, 0)
    assert g.layers == [[()]]
    g = sp_graph(3, 6)
    assert [len(layer) for layer in g.layers] == [1, 1, 1, 1, 1, 2, 2]
    assert set(g.layers[6]) == {(6,), (5, 1)}


@pytest.mark.parametrize("p, max_n", [(5, 30), (7, 25)])
def test_one_box_exhaustive(p, max_n):
    cr = SpCrystal(p)
    for n in range(max_n + 1):
        for lam in enumerate_sp(p, n):
            for i in cr.indices:
                audit = one_box_audit(lam, p, i)
                if audit["defined"]:
                    assert audit["size_step"] and audit["in_class"] and audit["block_ok"], (lam, i, audit)
    assert one_box_audit((), 5, 0)["result"] == (1,)


@pytest.mark.parametrize("p", [3, 5, 7, 9])
def test_window_operator_closure(p):
    """Operators on a concatenated window stay inside the window class."""
    h = (p - 1) // 2
    for j in (1, 2):
        cb = concat_block(p, j)
        members = set(sp_window_members(p, (j - 1) * p + 1, j * p - 1))
        for lam in members:
            for i in range(h + 1):
                for op in (cb.f, cb.e):
                    out = op(lam, i)
                    assert out is None or out in members
        assert reachable((), cb.f, range(h + 1)) == members


sp7 = st.integers(0, 25).flatmap(lambda n: st.sampled_from(sorted(enumerate_sp(7, n))))


@given(sp7, st.integers(0, 2))
def test_rebracketing_agrees(lam, i):
    assert sp_lower_rebracketed(lam, 7, i) == sp_lower(lam, 7, i)


@given(sp7, st.integers(0, 3))
def test_operators_stay_in_class(lam, i):
    out = sp_lower(lam, 7, i)
    if out is not None:
        assert in_sp(out, 7) and sum(out) == sum(lam) + 1
        assert sp_raise(out, 7, i) == lam


def test_concat_split_round_trip():
    cb = concat_block(7, 2)
    for lam in sp_window_members(7, 8, 13):
        minus, plus = cb.split(lam)
        assert union(minus, plus) == lam
