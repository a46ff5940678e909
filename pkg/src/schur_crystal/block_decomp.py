"""Splitting a block of S_p around a multiple of p into a plus half and a minus half.

A block is a member of S_p whose parts lie in [jp - h, jp + h]. It is
determined by the multiplicities m_{jp+i} for |i| <= h. ``decompose`` folds
it into a part above jp and a part below jp; ``recompose`` is the inverse.
"""

from __future__ import annotations

from collections import Counter
from typing import Sequence

from .partitions import Partition, half, restrict, union
from .sp_class import NotInClassError, in_sp, sp_window_members

Parts = Sequence[int]


def window(p: int, j: int) -> tuple[int, int]:
    h = half(p)
    return j * p - h, j * p + h


def plus_window(p: int, j: int) -> tuple[int, int]:
    return j * p + 1, j * p + half(p)


def minus_window(p: int, j: int) -> tuple[int, int]:
    return j * p - half(p), j * p - 1


def _in_range(parts: Parts, lo: int, hi: int) -> bool:
    return all(lo <= x <= hi for x in parts)


def balance(parts: Parts, p: int, j: int) -> list[int]:
    """Running excess a_i = -i + (number of parts within distance i of jp), i = 0..h."""
    h = half(p)
    m = Counter(parts)
    c = j * p
    out = []
    total = m[c]
    out.append(total)
    for i in range(1, h + 1):
        total += m[c + i] + m[c - i]
        out.append(total - i)
    return out


def first_zero(values: Sequence[int]) -> int | None:
    for i, v in enumerate(values):
        if v == 0:
            return i
    return None


def in_sp_window(parts: Parts, p: int, j: int) -> bool:
    lo, hi = window(p, j)
    return _in_range(parts, lo, hi) and in_sp(parts, p)


def characterize_window(parts: Parts, p: int, j: int) -> bool:
    """Membership of a window partition in S_p read off the running excess.

    The partition must be p-strict with at most h parts; it then belongs to
    S_p exactly when the excess never steps from 0 up to 1.
    """
    h = half(p)
    lo, hi = window(p, j)
    if not _in_range(parts, lo, hi):
        raise ValueError(f"{tuple(parts)} does not lie in [{lo}, {hi}]")
    m = Counter(parts)
    if len(parts) > h or any(c > 1 and v % p for v, c in m.items()):
        return False
    a = balance(parts, p, j)
    return not any(a[d] == 1 and a[d - 1] == 0 for d in range(1, h + 1))


def decompose(parts: Parts, p: int, j: int) -> tuple[Partition, Partition]:
    """Split a block into (plus half, minus half).

    Offsets i <= i0, where i0 is the first zero of the running excess, are
    reflected across jp; the rest stay where they are.
    """
    h = half(p)
    if not in_sp_window(parts, p, j):
        raise NotInClassError(f"{tuple(parts)} is not a member of S_{p} in block {j}")
    m = Counter(parts)
    c = j * p
    a = balance(parts, p, j)
    i0 = first_zero(a)
    assert i0 is not None, "a block member always reaches zero excess"
    plus, minus = [], []
    for i in range(1, h + 1):
        if i <= i0:
            up, down = 1 - m[c - i], 1 - m[c + i]
        else:
            up, down = m[c + i], m[c - i]
        plus += [c + i] * up
        minus += [c - i] * down
    return Partition(sorted(plus, reverse=True)), Partition(sorted(minus, reverse=True))


def recompose(plus: Parts, minus: Parts, p: int, j: int) -> Partition:
    """Inverse of ``decompose``. The number of parts equal to jp is the peak of
    the running excess of the two halves, and offsets up to the first peak
    are reflected back."""
    h = half(p)
    plo, phi = plus_window(p, j)
    mlo, mhi = minus_window(p, j)
    if not (_in_range(plus, plo, phi) and len(set(plus)) == len(plus)):
        raise ValueError(f"{tuple(plus)} is not a strict partition in [{plo}, {phi}]")
    if not (_in_range(minus, max(mlo, 1), mhi) and len(set(minus)) == len(minus)):
        raise ValueError(f"{tuple(minus)} is not a strict partition in [{mlo}, {mhi}]")
    mp, mm = Counter(plus), Counter(minus)
    c = j * p
    b = [0]
    for i in range(1, h + 1):
        b.append(b[-1] - 1 + mm[c - i] + mp[c + i])
    peak = max(b)
    j0 = b.index(peak)
    out = [c] * peak
    for i in range(1, h + 1):
        if i <= j0:
            out += [c + i] * (1 - mm[c - i]) + [c - i] * (1 - mp[c + i])
        else:
            out += [c + i] * mp[c + i] + [c - i] * mm[c - i]
    return Partition(sorted(out, reverse=True))


def block_members(p: int, j: int) -> list[Partition]:
    lo, hi = window(p, j)
    return sp_window_members(p, lo, hi)


def zigzag_plus_check(lam: Parts, mu: Parts, p: int, j: int) -> tuple[bool, bool]:
    """For a block-j member lam and a block-(j+1) member mu, return whether
    mu + lam and mu + (plus half of lam) lie in S_p. The two always agree."""
    lo, hi = window(p, j + 1)
    if not in_sp(mu, p) or not _in_range(mu, lo, hi):
        raise NotInClassError(f"{tuple(mu)} is not a member of S_{p} in block {j + 1}")
    plus, _ = decompose(lam, p, j)
    return in_sp(union(mu, lam), p), in_sp(union(mu, plus), p)


def zigzag_minus_check(lam: Parts, nu: Parts, p: int, j: int) -> tuple[bool, bool, bool]:
    """For a block-j member lam and a block-(j-1) member nu, return membership
    in S_p of lam + nu, (minus half of lam) + nu, and the two facing halves."""
    if j < 1:
        raise ValueError("block j - 1 must exist")
    lo, hi = window(p, j - 1)
    if not in_sp(nu, p) or not _in_range(nu, max(lo, 1), hi):
        raise NotInClassError(f"{tuple(nu)} is not a member of S_{p} in block {j - 1}")
    _, minus = decompose(lam, p, j)
    nu_plus = decompose(nu, p, j - 1)[0] if j - 1 >= 1 else Partition(nu)
    return (
        in_sp(union(lam, nu), p),
        in_sp(union(minus, nu), p),
        in_sp(union(minus, nu_plus), p),
    )


def directcalc_check(parts: Parts, p: int, j: int) -> bool:
    """Tail sums of the plus half against the two tail sums of the block.

    For 1 <= c <= h the number of parts of the plus half in [jp + c, jp + h]
    equals lower - (c - 1) when c <= i0, and equals upper when c > i0, where
    upper counts parts in [jp + c, jp + h] and lower counts parts in
    [jp + 1 - c, jp + h]; in the second case also upper = lower - (c - 1 + a_{c-1}).
    """
    h = half(p)
    plus, _ = decompose(parts, p, j)
    a = balance(parts, p, j)
    i0 = first_zero(a)
    c0 = j * p
    for c in range(1, h + 1):
        got = sum(1 for x in plus if c0 + c <= x <= c0 + h)
        upper = sum(1 for x in parts if c0 + c <= x <= c0 + h)
        lower = sum(1 for x in parts if c0 + 1 - c <= x <= c0 + h)
        if c <= i0:
            if got != lower - (c - 1) or got != upper + a[c - 1]:
                return False
        else:
            if got != upper or upper != lower - (c - 1 + a[c - 1]):
                return False
        if got < upper or got < lower - (c - 1):
            return False
    return True


def halves(parts: Parts, p: int, j: int) -> tuple[Partition, Partition]:
    """Plus and minus halves of the block-j restriction of any member of S_p.
    Block 0 has no minus half."""
    lo, hi = window(p, j)
    block = restrict(parts, max(lo, 1), hi) if hi >= 1 else Partition()
    if j == 0:
        return block, Partition()
    return decompose(block, p, j)
