"""Truncated integer power series and partition-identity checks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .classes import PartitionClass, count_class, iter_class
from .partitions import modulus


@dataclass(frozen=True)
class IntSeries:
    """Power series in t with integer coefficients, truncated after t^T."""

    coeffs: tuple[int, ...]

    @classmethod
    def one(cls, terms: int) -> "IntSeries":
        return cls((1,) + (0,) * terms)

    @property
    def terms(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def _match(self, other: "IntSeries") -> int:
        return min(self.terms, other.terms)

    def __add__(self, other: "IntSeries") -> "IntSeries":
        t = self._match(other)
        return IntSeries(tuple(self[n] + other[n] for n in range(t + 1)))

    def __sub__(self, other: "IntSeries") -> "IntSeries":
        t = self._match(other)
        return IntSeries(tuple(self[n] - other[n] for n in range(t + 1)))

    def __mul__(self, other: "IntSeries") -> "IntSeries":
        t = self._match(other)
        out = [0] * (t + 1)
        for a in range(t + 1):
            if self[a]:
                for b in range(t + 1 - a):
                    out[a + b] += self[a] * other[b]
        return IntSeries(tuple(out))

    def divide_one_minus(self, k: int) -> "IntSeries":
        """Multiply by 1 / (1 - t^k)."""
        out = list(self.coeffs)
        for n in range(k, len(out)):
            out[n] += out[n - k]
        return IntSeries(tuple(out))

    def times_one_minus(self, k: int) -> "IntSeries":
        out = list(self.coeffs)
        for n in range(len(out) - 1, k - 1, -1):
            out[n] -= out[n - k]
        return IntSeries(tuple(out))

    def shift_up(self, k: int) -> "IntSeries":
        """Multiply by t^k."""
        return IntSeries(((0,) * k + self.coeffs)[: len(self.coeffs)])


def product_character(p: int, terms: int) -> IntSeries:
    """Product of 1 / (1 - t^k) over odd k not divisible by p."""
    modulus(p)
    s = IntSeries.one(terms)
    for k in range(1, terms + 1, 2):
        if k % p:
            s = s.divide_one_minus(k)
    return s


def class_series(cls: PartitionClass, terms: int) -> IntSeries:
    """Generating series of a class by size. Classes with a known counting
    recurrence use it; everything else is enumerated."""
    counts = cls.counter(terms) if cls.counter is not None else count_class(cls, terms)
    return IntSeries(tuple(counts))


def two_variable_count(cls: PartitionClass, n: int, length: int) -> int:
    """Members of size n with exactly ``length`` parts."""
    return sum(1 for lam in iter_class(cls, n) if len(lam) == length)


def rr_sum_side(sigma: int, terms: int) -> IntSeries:
    """Sum over n of t^(n(n + sigma)) / ((1 - t)...(1 - t^n))."""
    if sigma not in (0, 1):
        raise ValueError("sigma must be 0 or 1")
    total = IntSeries((0,) * (terms + 1))
    n = 0
    while n * (n + sigma) <= terms:
        term = IntSeries.one(terms).shift_up(n * (n + sigma))
        for k in range(1, n + 1):
            term = term.divide_one_minus(k)
        total = total + term
        n += 1
    return total


def rr_product_side(sigma: int, terms: int) -> IntSeries:
    """Product over n >= 0 of 1 / ((1 - t^(5n + sigma + 1)) (1 - t^(5n + 4 - sigma)))."""
    if sigma not in (0, 1):
        raise ValueError("sigma must be 0 or 1")
    s = IntSeries.one(terms)
    n = 0
    while 5 * n + sigma + 1 <= terms:
        s = s.divide_one_minus(5 * n + sigma + 1)
        if 5 * n + 4 - sigma <= terms:
            s = s.divide_one_minus(5 * n + 4 - sigma)
        n += 1
    return s


def verify_pt_equivalence(
    cls_a: PartitionClass,
    cls_b: PartitionClass,
    max_n: int,
    as_sets: bool = False,
) -> dict:
    """Compare two classes size by size up to ``max_n``.

    With ``as_sets`` the members themselves are compared, otherwise only the
    counts. The report lists every count and the first size that disagrees.
    """
    counts = []
    first = None
    if as_sets:
        for n in range(max_n + 1):
            a = set(iter_class(cls_a, n))
            b = set(iter_class(cls_b, n))
            counts.append([n, len(a), len(b)])
            if first is None and a != b:
                first = n
    else:
        sa = class_series(cls_a, max_n)
        sb = class_series(cls_b, max_n)
        for n in range(max_n + 1):
            counts.append([n, sa[n], sb[n]])
            if first is None and sa[n] != sb[n]:
                first = n
    return {
        "class_a": cls_a.name,
        "class_b": cls_b.name,
        "params": {"a": cls_a.params, "b": cls_b.params, "max_n": max_n, "sets": as_sets},
        "counts": counts,
        "verdict": "pass" if first is None else "fail",
        "first_mismatch": first,
    }


def series_equal(a: Sequence[int], b: Sequence[int]) -> bool:
    return list(a) == list(b)
