"""Classical partition classes and a generic depth-first enumerator.

A class is described by a full membership predicate and, when every run of
largest parts of a member is again a member, by a cheap test deciding whether
a new smallest part may be appended. The enumerator builds partitions from
the largest part down and never visits anything outside the class (or outside
a declared prefix-closed base class that is filtered at the leaves).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Sequence

from .partitions import modulus

Parts = Sequence[int]


# ---------------------------------------------------------------------------
# elementary conditions


def is_strict(parts: Parts) -> bool:
    return all(parts[k] > parts[k + 1] for k in range(len(parts) - 1))


def is_a_strict(parts: Parts, a: int) -> bool:
    """Repeated parts are allowed only when divisible by ``a``."""
    return all(parts[k] > parts[k + 1] or parts[k] % a == 0 for k in range(len(parts) - 1))


def is_a_regular(parts: Parts, a: int) -> bool:
    """Every part occurs fewer than ``a`` times."""
    return all(c < a for c in Counter(parts).values())


def is_class_regular(parts: Parts, a: int) -> bool:
    """No part is divisible by ``a``."""
    return all(x % a for x in parts)


def in_dp(parts: Parts, p: int) -> bool:
    """Distinct parts, none divisible by p."""
    modulus(p)
    return is_strict(parts) and is_class_regular(parts, p)


def in_odd_regular(parts: Parts, p: int) -> bool:
    """Odd parts, none divisible by p (repetition allowed)."""
    return is_class_regular(parts, 2) and is_class_regular(parts, p)


def in_rr(parts: Parts) -> bool:
    """Consecutive parts differ by at least 2."""
    return all(parts[k] - parts[k + 1] >= 2 for k in range(len(parts) - 1))


def in_rr_prime(parts: Parts) -> bool:
    return in_rr(parts) and 1 not in parts


def in_residue_class(parts: Parts, a: int, b: int) -> bool:
    """Every part is congruent to a or -a modulo b."""
    return all(x % b in (a % b, -a % b) for x in parts)


def andrews_params_ok(l: int, k: int, a: int) -> bool:
    return 0 <= l and l < 2 * a and a <= k and l <= k


def in_andrews_a(parts: Parts, l: int, k: int, a: int) -> bool:
    """Congruence side: parts avoiding 0 and +-(2a - l)(l + 1)/2 modulo (2k - l + 1)(l + 1)."""
    mod = (2 * k - l + 1) * (l + 1)
    off = (2 * a - l) * (l + 1) // 2
    banned = {0, off % mod, -off % mod}
    if any(x % mod in banned for x in parts):
        return False
    if l % 2 == 0:
        return is_a_strict(parts, l + 1)
    if not is_a_strict(parts, (l + 1) // 2):
        return False
    return all(x % (2 * (l + 1)) != l + 1 for x in parts)


def in_andrews_b(parts: Parts, l: int, k: int, a: int) -> bool:
    """Difference side: (l+1)-strict, a gap rule across k - 1 steps, and caps on small parts."""
    step = l + 1
    if not is_a_strict(parts, step):
        return False
    for i in range(len(parts) - (k - 1)):
        gap = parts[i] - parts[i + k - 1]
        if gap < step or (gap == step and parts[i] % step == 0):
            return False
    m = Counter(parts)
    if sum(m[i] for i in range(1, l + 2)) > a - 1:
        return False
    for j in range(1, (l + 1) // 2 + 1):
        if sum(m[i] for i in range(j, l - j + 2)) > a - j:
            return False
    return True


def in_b433(parts: Parts) -> bool:
    """The modified Andrews class with parameters (4, 3, 3)."""
    if not is_a_strict(parts, 5):
        return False
    for i in range(len(parts) - 2):
        gap = parts[i] - parts[i + 2]
        if gap < 5 or (gap == 5 and parts[i] % 5 == 0):
            return False
    m = Counter(parts)
    top = parts[0] if parts else 0
    for j in range(0, top // 5 + 1):
        base = 5 * j
        if m[base + 3] + m[base + 2] > 1:
            return False
        if m[base + 6] + m[base + 4] > 1:
            return False
        if m[base + 11] + m[base + 10] + m[base + 5] + m[base + 4] > 3:
            return False
    return True


def in_schur3(parts: Parts) -> bool:
    """Gaps of at least 3, and more than 3 below a multiple of 3."""
    for i in range(len(parts) - 1):
        gap = parts[i] - parts[i + 1]
        if gap < 3 or (gap == 3 and parts[i] % 3 == 0):
            return False
    return True


SCHUR5_PATTERNS = ((3, 2), (11, 9, 5), (10, 6, 4), (11, 10, 5, 4))


@lru_cache(maxsize=64)
def _shift_index(patterns: tuple, p: int) -> dict:
    """Patterns grouped by length, successive differences and residue of the
    last part; each group keeps its lowest last part."""
    index: dict = {}
    for pat in patterns:
        key = (len(pat), tuple(pat[k] - pat[k + 1] for k in range(len(pat) - 1)), pat[-1] % p)
        index[key] = min(index.get(key, pat[-1]), pat[-1])
    return index


def avoids_shifted(parts: Parts, patterns: Sequence[Parts], p: int) -> bool:
    """True if no upward p-shift of any pattern occurs as consecutive parts."""
    index = _shift_index(tuple(tuple(pat) for pat in patterns), p)
    lengths = {key[0] for key in index}
    n = len(parts)
    for m in lengths:
        for s in range(n - m + 1):
            run = parts[s:s + m]
            key = (m, tuple(run[k] - run[k + 1] for k in range(m - 1)), run[-1] % p)
            low = index.get(key)
            if low is not None and low <= run[-1]:
                return False
    return True


def in_schur5(parts: Parts) -> bool:
    if not is_strict(parts):
        return False
    for i in range(len(parts) - 2):
        gap = parts[i] - parts[i + 2]
        if gap < 5:
            return False
        if gap == 5 and (parts[i] % 5 == 0 or (parts[i] + parts[i + 1]) % 5 == 0):
            return False
    return avoids_shifted(parts, SCHUR5_PATTERNS, 5)


def restricted_gaps_ok(parts: Parts, p: int) -> bool:
    """Gap rule between consecutive parts of a p-restricted partition."""
    for i in range(len(parts) - 1):
        gap = parts[i] - parts[i + 1]
        if gap > p or (gap == p and parts[i] % p == 0):
            return False
    return True


def in_restricted(parts: Parts, p: int) -> bool:
    """p-strict and p-restricted, the last part compared against an implicit zero."""
    modulus(p)
    if not is_a_strict(parts, p) or not restricted_gaps_ok(parts, p):
        return False
    return not parts or parts[-1] < p


# ---------------------------------------------------------------------------
# class objects and enumeration


@dataclass(frozen=True)
class PartitionClass:
    """A family of partitions with the hooks needed to enumerate it.

    ``extend_ok(prefix, x)`` must agree with ``contains(prefix + (x,))``
    whenever ``prefix`` is itself accepted. When ``base`` is set, the class is
    enumerated by walking ``base`` and filtering complete partitions with
    ``contains``.
    """

    name: str
    contains: Callable[[Parts], bool]
    extend_ok: Callable[[Parts, int], bool] | None = None
    base: "PartitionClass | None" = None
    params: dict = field(default_factory=dict)
    counter: Callable[[int], list[int]] | None = None

    def __call__(self, parts: Parts) -> bool:
        return self.contains(tuple(parts))

    def _extend(self) -> Callable[[Parts, int], bool]:
        if self.extend_ok is not None:
            return self.extend_ok
        contains = self.contains
        return lambda prefix, x: contains((*prefix, x))


def iter_class(cls: PartitionClass, n: int, first: int | None = None) -> Iterator[tuple[int, ...]]:
    """Members of size n in lexicographically decreasing order.

    ``first`` pins the largest part, which is how work is split across processes.
    """
    if cls.base is not None:
        for lam in iter_class(cls.base, n, first):
            if cls.contains(lam):
                yield lam
        return
    if n == 0:
        if first is None:
            yield ()
        return
    ok = cls._extend()
    prefix: list[int] = []

    def walk(remaining: int, cap: int):
        if remaining == 0:
            yield tuple(prefix)
            return
        for x in range(min(cap, remaining), 0, -1):
            if ok(prefix, x):
                prefix.append(x)
                yield from walk(remaining - x, x)
                prefix.pop()

    tops = range(n, 0, -1) if first is None else [first] if 0 < first <= n else []
    for x in tops:
        if ok(prefix, x):
            prefix.append(x)
            yield from walk(n - x, x)
            prefix.pop()


def count_class(cls: PartitionClass, max_n: int, first: int | None = None) -> list[int]:
    """Counts of members of every size 0..max_n, by one depth-first walk."""
    counts = [0] * (max_n + 1)
    if cls.base is not None:
        for n in range(max_n + 1):
            if first is not None and n == 0:
                continue
            counts[n] = sum(1 for _ in iter_class(cls, n, first))
        return counts
    if first is None:
        counts[0] = 1
    ok = cls._extend()
    prefix: list[int] = []

    def walk(size: int, cap: int):
        counts[size] += 1
        for x in range(min(cap, max_n - size), 0, -1):
            if ok(prefix, x):
                prefix.append(x)
                walk(size + x, x)
                prefix.pop()

    tops = range(max_n, 0, -1) if first is None else [first] if 0 < first <= max_n else []
    for x in tops:
        if ok(prefix, x):
            prefix.append(x)
            walk(x, x)
            prefix.pop()
    return counts


def count_distinct_avoiding(p: int, max_n: int) -> list[int]:
    """Counts of partitions into distinct parts not divisible by p (0/1 knapsack)."""
    counts = [1] + [0] * max_n
    for part in range(1, max_n + 1):
        if part % p == 0:
            continue
        for n in range(max_n, part - 1, -1):
            counts[n] += counts[n - part]
    return counts


def count_odd_avoiding(p: int, max_n: int) -> list[int]:
    """Counts of partitions into odd parts not divisible by p (unbounded knapsack)."""
    counts = [1] + [0] * max_n
    for part in range(1, max_n + 1, 2):
        if part % p == 0:
            continue
        for n in range(part, max_n + 1):
            counts[n] += counts[n - part]
    return counts


def _strict_ext(prefix: Parts, x: int) -> bool:
    return not prefix or prefix[-1] > x


def strict_class() -> PartitionClass:
    return PartitionClass("strict", is_strict, _strict_ext)


def dp_class(p: int) -> PartitionClass:
    modulus(p)

    def ext(prefix, x):
        return x % p != 0 and (not prefix or prefix[-1] > x)

    return PartitionClass(
        "dp", lambda lam: in_dp(lam, p), ext, params={"p": p},
        counter=lambda n: count_distinct_avoiding(p, n),
    )


def odd_regular_class(p: int) -> PartitionClass:
    modulus(p)

    def ext(prefix, x):
        return x % 2 == 1 and x % p != 0

    return PartitionClass(
        "creg2p", lambda lam: in_odd_regular(lam, p), ext, params={"p": p},
        counter=lambda n: count_odd_avoiding(p, n),
    )


def rr_class() -> PartitionClass:
    return PartitionClass("r", in_rr, lambda pre, x: not pre or pre[-1] - x >= 2)


def rr_prime_class() -> PartitionClass:
    return PartitionClass(
        "rprime", in_rr_prime, lambda pre, x: x != 1 and (not pre or pre[-1] - x >= 2)
    )


def residue_class(a: int, b: int) -> PartitionClass:
    ok = {a % b, -a % b}
    return PartitionClass(
        "t", lambda lam: in_residue_class(lam, a, b), lambda pre, x: x % b in ok,
        params={"a": a, "b": b},
    )


def andrews_a_class(l: int, k: int, a: int) -> PartitionClass:
    return PartitionClass(
        "a", lambda lam: in_andrews_a(lam, l, k, a), params={"l": l, "k": k, "a": a}
    )


def andrews_b_class(l: int, k: int, a: int) -> PartitionClass:
    return PartitionClass(
        "b", lambda lam: in_andrews_b(lam, l, k, a), params={"l": l, "k": k, "a": a}
    )


def b433_class() -> PartitionClass:
    return PartitionClass("b433", in_b433)


def schur3_class() -> PartitionClass:
    def ext(pre, x):
        if not pre:
            return True
        gap = pre[-1] - x
        return gap > 3 or (gap == 3 and pre[-1] % 3 != 0)

    return PartitionClass("schur3", in_schur3, ext)


def schur5_class() -> PartitionClass:
    return PartitionClass("schur5", in_schur5)


def restricted_class(p: int) -> PartitionClass:
    modulus(p)

    def ext(pre, x):
        if not pre:
            return True
        y = pre[-1]
        if y == x and x % p:
            return False
        gap = y - x
        return gap < p or (gap == p and y % p != 0)

    base = PartitionClass("rp-gaps", lambda lam: is_a_strict(lam, p) and restricted_gaps_ok(lam, p), ext)
    return PartitionClass("rp", lambda lam: in_restricted(lam, p), base=base, params={"p": p})


CLASSICAL = {
    "strict": lambda **kw: strict_class(),
    "dp": lambda p, **kw: dp_class(p),
    "creg2p": lambda p, **kw: odd_regular_class(p),
    "r": lambda **kw: rr_class(),
    "rprime": lambda **kw: rr_prime_class(),
    "t": lambda a, b, **kw: residue_class(a, b),
    "a": lambda l, k, a, **kw: andrews_a_class(l, k, a),
    "b": lambda l, k, a, **kw: andrews_b_class(l, k, a),
    "b433": lambda **kw: b433_class(),
    "schur3": lambda **kw: schur3_class(),
    "schur5": lambda **kw: schur5_class(),
    "rp": lambda p, **kw: restricted_class(p),
}


def classify_classical(parts: Parts, name: str, **params) -> bool:
    """Membership of ``parts`` in one of the classical classes named in ``CLASSICAL``."""
    try:
        factory = CLASSICAL[name]
    except KeyError:
        raise ValueError(f"unknown class {name!r}") from None
    return factory(**params).contains(tuple(parts))
