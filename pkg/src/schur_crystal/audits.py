"""Exhaustive consistency checks over bounded ranges.

Each function returns a plain dict (JSON-ready) with a ``verdict`` of
"pass" or "fail" plus enough detail to locate the first failure.
"""

from __future__ import annotations

from .block_decomp import (
    block_members,
    decompose,
    minus_window,
    plus_window,
    recompose,
    zigzag_minus_check,
    zigzag_plus_check,
)
from .kn_crystal import KNCrystal, all_words, psi
from .partitions import Partition, half, subsets_in_window
from .sp_class import enumerate_sp, sp_window_members
from .sp_crystal import SpCrystal, concat_block, one_box_audit, sp_graph, sp_lower_rebracketed


def _verdict(ok: bool) -> str:
    return "pass" if ok else "fail"


def verify_crystal(p: int, max_n: int) -> dict:
    """Layers of the graph grown from the empty partition against S_p(n),
    one box per arrow (also per touched block), e_i and f_i undoing each
    other, and agreement with the regrouped tensor order for i < h."""
    cr = SpCrystal(p)
    g = sp_graph(p, max_n)
    layers, expected = [], []
    first_layer_mismatch = None
    for n, layer in enumerate(g.layers):
        members = set(enumerate_sp(p, n))
        layers.append(len(layer))
        expected.append(len(members))
        if first_layer_mismatch is None and set(layer) != members:
            first_layer_mismatch = n
    size_bad = [(list(a), i, list(b)) for a, i, b in g.edges if sum(b) != sum(a) + 1]
    inverse_bad, box_bad, bracket_bad = [], [], []
    for b in g.vertices():
        for i in cr.indices:
            if sum(b) < max_n:
                audit = one_box_audit(b, p, i)
                if audit["defined"] and not (audit["size_step"] and audit["in_class"] and audit["block_ok"]):
                    box_bad.append((list(b), i))
            if i < cr.h and sp_lower_rebracketed(b, p, i) != cr.f(b, i):
                bracket_bad.append((list(b), i))
            c = cr.f(b, i)
            if c is not None and cr.e(c, i) != b:
                inverse_bad.append((list(b), i, "f"))
            c = cr.e(b, i)
            if c is not None and cr.f(c, i) != b:
                inverse_bad.append((list(b), i, "e"))
    ok = first_layer_mismatch is None and not (size_bad or inverse_bad or box_bad or bracket_bad)
    return {
        "check": "crystal", "p": p, "max_n": max_n,
        "layers": layers, "expected": expected,
        "first_layer_mismatch": first_layer_mismatch,
        "size_step_failures": size_bad[:5],
        "pseudo_inverse_failures": inverse_bad[:5],
        "one_box_failures": box_bad[:5],
        "bracketing_failures": bracket_bad[:5],
        "verdict": _verdict(ok),
    }


def verify_roundtrip(p: int, j: int, max_content: int | None = None) -> dict:
    """decompose and recompose are mutually inverse on block j.

    With ``max_content`` only blocks (or pairs of halves) of total size up
    to that bound are visited; without it the whole block is exhausted and
    the halves must fill all 2^(2h) pairs.
    """
    h = half(p)
    failures = []
    seen = set()
    members = [lam for lam in block_members(p, j) if max_content is None or sum(lam) <= max_content]
    for lam in members:
        pair = decompose(lam, p, j)
        seen.add(pair)
        if recompose(*pair, p, j) != lam:
            failures.append(("recompose", list(lam)))
    plo, phi = plus_window(p, j)
    mlo, mhi = minus_window(p, j)
    pairs = 0
    for plus in subsets_in_window(plo, phi):
        for minus in subsets_in_window(mlo, mhi):
            if max_content is not None and sum(plus) + sum(minus) > max_content:
                continue
            pairs += 1
            lam = recompose(plus, minus, p, j)
            if decompose(lam, p, j) != (Partition(plus), Partition(minus)):
                failures.append(("decompose", list(plus), list(minus)))
    full = max_content is None
    if full and len(seen) != 4 ** h:
        failures.append(("surjectivity", len(seen)))
    return {
        "check": "roundtrip", "p": p, "j": j, "max_content": max_content,
        "blocks": len(members), "pairs": pairs, "failures": failures[:5],
        "verdict": _verdict(not failures),
    }


def verify_zigzag(p: int, j: int, max_content: int) -> dict:
    """Membership of two neighbouring blocks is unchanged when the lower one
    is replaced by its plus half, or the upper one by its minus half."""
    failures = []
    tested = 0
    lower = block_members(p, j)
    upper = block_members(p, j + 1)
    below = block_members(p, j - 1) if j >= 2 else sp_window_members(p, 1, half(p))
    for lam in lower:
        for mu in upper:
            if sum(lam) + sum(mu) > max_content:
                continue
            tested += 1
            a, b = zigzag_plus_check(lam, mu, p, j)
            if a != b:
                failures.append(("plus", list(mu), list(lam)))
        for nu in below:
            if sum(lam) + sum(nu) > max_content:
                continue
            tested += 1
            a, b, c = zigzag_minus_check(lam, nu, p, j)
            if not a == b == c:
                failures.append(("minus", list(lam), list(nu)))
            if j >= 2:
                x, y = zigzag_plus_check(nu, lam, p, j - 1)
                if x != y or x != a:
                    failures.append(("lower-plus", list(lam), list(nu)))
    return {
        "check": "zigzag", "p": p, "j": j, "max_content": max_content,
        "tested": tested, "failures": failures[:5], "verdict": _verdict(not failures),
    }


def verify_psi(p: int, j: int, s: int | None = None) -> dict:
    """The column map is injective, lands in S_p, intertwines index i on
    columns with index h - i on the window, and is onto when s = h."""
    h = half(p)
    s = h if s is None else s
    words = all_words(h, s)
    cb = concat_block(p, j)
    kc = KNCrystal(h, s)
    window = set(sp_window_members(p, (j - 1) * p + 1, j * p - 1))
    images = {}
    failures = []
    for w in words:
        img = psi(w, p, j)
        if img in images:
            failures.append(("injective", list(w), list(images[img])))
        images[img] = w
        if img not in window:
            failures.append(("range", list(w)))
    if s == h and set(images) != window:
        failures.append(("onto", len(images), len(window)))
    indices = range(h + 1) if s == h else range(h)
    for w in words:
        x = psi(w, p, j)
        for i in indices:
            for op_w, op_x, name in ((kc.f, cb.f, "f"), (kc.e, cb.e, "e")):
                a, b = op_w(w, i), op_x(x, h - i)
                if (a is None) != (b is None) or (a is not None and psi(a, p, j) != b):
                    failures.append((name, i, list(w)))
    return {
        "check": "psi", "p": p, "j": j, "s": s, "words": len(words),
        "window": len(window), "failures": failures[:5], "verdict": _verdict(not failures),
    }


def verify_window_truncation(p: int, max_n: int, extra: int = 5) -> dict:
    """Operators computed with one empty block above the support agree with
    those computed with ``extra`` empty blocks."""
    near, far = SpCrystal(p, 1), SpCrystal(p, extra)
    failures = []
    total = 0
    for n in range(max_n + 1):
        for lam in enumerate_sp(p, n):
            total += 1
            for i in near.indices:
                if near.f(lam, i) != far.f(lam, i) or near.e(lam, i) != far.e(lam, i):
                    failures.append((list(lam), i))
    return {
        "check": "window", "p": p, "max_n": max_n, "elements": total,
        "failures": failures[:5], "verdict": _verdict(not failures),
    }
