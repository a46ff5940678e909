"""Membership, local structure and enumeration of the class S_p.

Three independent membership predicates are provided: the defining list of
forbidden pairs, the minimal list (with the strict gap rule), and the compact
pairwise form. They are expected to agree everywhere.
"""

from __future__ import annotations

from collections import Counter
from typing import Iterator, Sequence

from .classes import PartitionClass, count_class, in_andrews_b, is_a_strict, iter_class
from .partitions import Partition, half, restrict

Parts = Sequence[int]


def _gap_ok(parts: Parts, p: int, h: int) -> bool:
    return all(parts[i] - parts[i + h] >= p for i in range(len(parts) - h))


def in_sp(parts: Parts, p: int) -> bool:
    """Membership by the defining conditions.

    Besides p-strictness and the gap rule across h steps, three families of
    pairs are forbidden: for 1 <= d <= h and k >= 1,
    (pk + d, pk - d) at distance d and (pk + p + d', pk - d') at distance
    h + d' (0 <= d' <= h); for k >= 0, (pk + h + d, pk + h + 1 - d) at
    distance d. Only k with pk <= largest part + p can matter.
    """
    h = half(p)
    parts = tuple(parts)
    if not is_a_strict(parts, p) or not _gap_ok(parts, p, h):
        return False
    n = len(parts)
    top = parts[0] if parts else 0
    kmax = top // p + 1
    for i in range(n):
        x = parts[i]
        for d in range(1, h + 1):
            if i + d < n:
                y = parts[i + d]
                for k in range(1, kmax + 1):
                    if x == p * k + d and y == p * k - d:
                        return False
                for k in range(0, kmax + 1):
                    if x == p * k + h + d and y == p * k + h + 1 - d:
                        return False
        for dd in range(0, h + 1):
            if i + h + dd < n:
                y = parts[i + h + dd]
                for k in range(1, kmax + 1):
                    if x == p * k + p + dd and y == p * k - dd:
                        return False
    return True


def in_sp_minimal(parts: Parts, p: int) -> bool:
    """Membership by the minimal list: a gap rule that is strict above multiples
    of p, and three pattern families with 1 <= d < h."""
    h = half(p)
    parts = tuple(parts)
    if not is_a_strict(parts, p):
        return False
    n = len(parts)
    for i in range(n - h):
        gap = parts[i] - parts[i + h]
        if gap < p or (gap == p and parts[i] % p == 0):
            return False
    for i in range(n):
        x = parts[i]
        for d in range(1, h):
            if i + d < n:
                y = parts[i + d]
                r = x - d
                if r > 0 and r % p == 0 and y == r - d:
                    return False
                r = x - h - d
                if r >= 0 and r % p == 0 and y == r + h + 1 - d:
                    return False
            if i + h + d < n:
                y = parts[i + h + d]
                r = x - p - d
                if r > 0 and r % p == 0 and y == r - d:
                    return False
    return True


def in_sp_compact(parts: Parts, p: int) -> bool:
    """Membership by the pairwise form: forbidden pairs are recognised by
    their sum being a multiple of p and their difference."""
    h = half(p)
    parts = tuple(parts)
    if not is_a_strict(parts, p) or not _gap_ok(parts, p, h):
        return False
    n = len(parts)
    for i in range(n):
        for j in range(i + 1, min(n, i + 2 * h + 1)):
            if (parts[i] + parts[j]) % p:
                continue
            d = j - i
            diff = parts[i] - parts[j]
            if d < h and diff in (2 * d, 2 * d - 1):
                return False
            if d >= h and diff == 2 * d + 1:
                return False
    return True


def sp_extend_ok(prefix: Parts, x: int, p: int, h: int) -> bool:
    """Whether x may be appended as a new smallest part to a member ``prefix``."""
    t = len(prefix)
    if t:
        last = prefix[-1]
        if last < x or (last == x and x % p):
            return False
    if t >= h and prefix[t - h] - x < p:
        return False
    for d in range(1, min(t, 2 * h) + 1):
        y = prefix[t - d]
        if (y + x) % p:
            continue
        diff = y - x
        if d < h:
            if diff == 2 * d or diff == 2 * d - 1:
                return False
        elif diff == 2 * d + 1:
            return False
    return True


def sp_class(p: int) -> PartitionClass:
    h = half(p)
    return PartitionClass(
        "sp",
        lambda lam: in_sp(lam, p),
        lambda pre, x: sp_extend_ok(pre, x, p, h),
        params={"p": p},
    )


def enumerate_sp(p: int, n: int) -> Iterator[Partition]:
    """Members of S_p of size n, lexicographically decreasing."""
    for lam in iter_class(sp_class(p), n):
        yield Partition(lam)


def count_sp(p: int, max_n: int) -> list[int]:
    return count_class(sp_class(p), max_n)


def sp_local_check(parts: Parts, p: int) -> bool:
    """Membership decided one two-block window [(j-1)p - h, jp + h] at a time."""
    h = half(p)
    if not parts:
        return True
    top = (parts[0] + h) // p + 1
    return all(in_sp(restrict(parts, (j - 1) * p - h, j * p + h), p) for j in range(1, top + 1))


class NotInClassError(ValueError):
    pass


def _require_sp(parts: Parts, p: int) -> None:
    if not in_sp(parts, p):
        raise NotInClassError(f"{tuple(parts)} is not in S_{p}")


def check_window_counts(parts: Parts, p: int) -> bool:
    """Count bounds on windows around multiples of p that every member satisfies.

    For j >= 0: at most d parts in [jp + h + 1 - d, jp + h + d] (1 <= d <= h),
    and at most h + d parts in [jp - d, jp + p + d] (0 <= d <= h).
    """
    _require_sp(parts, p)
    h = half(p)
    m = Counter(parts)
    top = parts[0] if parts else 0
    for j in range(0, top // p + 2):
        c = j * p
        for d in range(1, h + 1):
            if sum(m[v] for v in range(c + h + 1 - d, c + h + d + 1)) > d:
                return False
        for d in range(0, h + 1):
            if sum(m[v] for v in range(c - d, c + p + d + 1)) > h + d:
                return False
    return True


def check_andrews_containment(parts: Parts, p: int) -> bool:
    """Every member lies in the Andrews difference class with l = p - 1, k = a = h + 1."""
    _require_sp(parts, p)
    h = half(p)
    return in_andrews_b(parts, p - 1, h + 1, h + 1)


def sp_window_members(p: int, a: int, b: int) -> list[Partition]:
    """All members of S_p with every part in [a, b] (a >= 1)."""
    h = half(p)
    a = max(a, 1)
    out: list[Partition] = []
    prefix: list[int] = []

    def walk(cap: int):
        out.append(Partition(prefix))
        for x in range(cap, a - 1, -1):
            if sp_extend_ok(prefix, x, p, h):
                prefix.append(x)
                walk(x)
                prefix.pop()

    walk(b)
    return out
