from hypothesis import given, strategies as st

from schur_crystal.kn_crystal import letter_crystal, letters
from schur_crystal.precrystal import (
    TensorProduct,
    Unit,
    crystal_graph,
    reachable,
    signature_reduce,
    tensor_lower,
    tensor_phi_eps,
    tensor_raise,
)

B2 = letter_crystal(2)
B3 = letter_crystal(3)


def max_formula(pairs):
    """Direct evaluation: best (eps, phi) over factors with their partial sums."""
    eps_vals, phi_vals = [], []
    for k, (e, p) in enumerate(pairs):
        eps_vals.append(e - sum(pp - ee for ee, pp in pairs[:k]))
        phi_vals.append(p + sum(pp - ee for ee, pp in pairs[k + 1:]))
    return max(eps_vals), max(phi_vals), eps_vals, phi_vals


def test_two_letter_examples():
    d = TensorProduct([B2, B2]).data((1, 1), 1)
    assert (d.eps, d.phi, d.k_f) == (0, 2, 0)
    d = TensorProduct([B2, B2]).data((2, 1), 1)
    assert (d.eps, d.phi) == (1, 1)
    assert tensor_lower([B2, B2], (1, 1), 1) == (2, 1)
    assert tensor_lower([B2, B2], (2, 1), 1) == (2, 2)
    assert tensor_raise([B2, B2], (2, 1), 1) == (1, 1)
    assert tensor_raise([B2, B2], (1, 1), 1) is None


def test_single_and_empty():
    d = tensor_phi_eps([(2, 3)])
    assert (d.eps, d.phi) == (2, 3)
    d = tensor_phi_eps([])
    assert (d.eps, d.phi, d.k_e, d.k_f) == (0, 0, None, None)
    u = Unit([1, 2])
    assert u.e("u", 1) is None and u.f("u", 2) is None


pairs = st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=6)


@given(pairs)
def test_signature_matches_max_formula(ps):
    d = tensor_phi_eps(ps)
    s = signature_reduce(ps)
    eps, phi, eps_vals, phi_vals = max_formula(ps)
    assert (d.eps, d.phi) == (s.eps, s.phi) == (eps, phi)
    assert d.k_e == eps_vals.index(eps)
    assert d.k_f == len(phi_vals) - 1 - phi_vals[::-1].index(phi)
    if s.eps:
        assert s.k_e == d.k_e
    if s.phi:
        assert s.k_f == d.k_f


words = st.lists(st.sampled_from(letters(3)), min_size=4, max_size=4).map(tuple)


@given(words, st.integers(1, 3))
def test_tensor_words_against_signature(w, i):
    prod = TensorProduct([B3] * 4)
    ps = [(B3.eps(x, i), B3.phi(x, i)) for x in w]
    s = signature_reduce(ps)
    f = prod.f(w, i)
    if s.phi == 0:
        assert f is None
    else:
        assert f[s.k_f] == B3.f(w[s.k_f], i)
        assert prod.e(f, i) == w
    assert prod.eps(w, i) == s.eps and prod.phi(w, i) == s.phi


@given(st.sampled_from(letters(3)), st.sampled_from(letters(3)), st.sampled_from(letters(3)), st.integers(1, 3))
def test_associativity(a, b, c, i):
    left = TensorProduct([TensorProduct([B3, B3]), B3])
    right = TensorProduct([B3, TensorProduct([B3, B3])])
    flat = TensorProduct([B3, B3, B3])
    flatten_l = lambda x: None if x is None else (*x[0], x[1])
    flatten_r = lambda x: None if x is None else (x[0], *x[1])
    for op in ("f", "e"):
        got_l = flatten_l(getattr(left, op)(((a, b), c), i))
        got_r = flatten_r(getattr(right, op)((a, (b, c)), i))
        assert got_l == got_r == getattr(flat, op)((a, b, c), i)
    assert left.eps(((a, b), c), i) == right.eps((a, (b, c)), i)
    assert left.phi(((a, b), c), i) == right.phi((a, (b, c)), i)


def test_letter_chain_is_a_path():
    n = 3
    g = crystal_graph(1, 2 * n, B3.f, B3.indices)
    assert [layer for layer in g.layers] == [[x] for x in letters(n)]
    assert len(g.edges) == 2 * n
    assert reachable(1, B3.f, B3.indices) == set(letters(n))


def test_graph_depth_zero_and_dot():
    g = crystal_graph(1, 0, B3.f, B3.indices)
    assert g.layers == [[1]] and g.edges == []
    dot = crystal_graph(1, 2, B3.f, B3.indices).to_dot()
    assert dot.startswith("digraph") and "->" in dot
