"""Integer partitions as immutable decreasing tuples, plus the basic operations
used throughout the package (shifts, windows, consecutive patterns)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Being a tuple subclass, a ``Partition`` compares and hashes like the plain
    tuple of its parts, so ``Partition((6, 3)) == (6, 3)``.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(x) for x in parts)
        for k, x in enumerate(parts):
            if x <= 0:
                raise ValueError(f"part {k + 1} is {x}; parts must be positive")
            if k and parts[k - 1] < x:
                raise ValueError(f"parts {k} and {k + 1} increase ({parts[k - 1]} < {x})")
        return super().__new__(cls, parts)

    @classmethod
    def from_multiset(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted(parts, reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (1-based); zero beyond the length."""
        if i < 1:
            raise IndexError("parts are indexed from 1")
        return self[i - 1] if i <= len(self) else 0

    def multiplicity(self, value: int) -> int:
        return multiplicity(self, value)

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)!r})"


def multiplicity(parts: Sequence[int], value: int) -> int:
    """Number of parts equal to ``value``."""
    return sum(1 for x in parts if x == value)


def multiplicities(parts: Sequence[int]) -> Counter:
    return Counter(parts)


def is_partition(parts: Sequence[int]) -> bool:
    return all(x > 0 for x in parts) and all(
        parts[k] >= parts[k + 1] for k in range(len(parts) - 1)
    )


def shift(parts: Sequence[int], a: int, k: int = 1) -> Partition:
    """Add ``k * a`` to every part. Raises if some part would become non-positive."""
    out = tuple(x + k * a for x in parts)
    if out and out[-1] <= 0:
        raise ValueError(f"shifting {format_partition(parts)!r} by {k * a} leaves a non-positive part")
    return Partition(out)


def matches_subpattern(parts: Sequence[int], pattern: Sequence[int]) -> bool:
    """True if ``pattern`` occurs as a run of consecutive parts. The empty pattern always occurs."""
    m = len(pattern)
    if m == 0:
        return True
    pattern = tuple(pattern)
    parts = tuple(parts)
    return any(parts[s:s + m] == pattern for s in range(len(parts) - m + 1))


def restrict(parts: Sequence[int], a: int, b: int) -> Partition:
    """Keep only the parts lying in the closed interval [a, b]."""
    if a > b:
        raise ValueError(f"empty interval [{a}, {b}]")
    return Partition(x for x in parts if a <= x <= b)


def add_part(parts: Sequence[int], x: int) -> Partition:
    return Partition.from_multiset((*parts, x))


def remove_part(parts: Sequence[int], x: int) -> Partition:
    parts = list(parts)
    try:
        parts.remove(x)
    except ValueError:
        raise ValueError(f"{x} is not a part of {format_partition(parts)!r}") from None
    return Partition(parts)


def union(*partitions: Sequence[int]) -> Partition:
    return Partition.from_multiset(x for lam in partitions for x in lam)


@dataclass(frozen=True)
class OddModulus:
    """An odd modulus p >= 3 together with its half h = (p - 1) / 2."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or self.p < 3 or self.p % 2 == 0:
            raise ValueError(f"modulus must be an odd integer >= 3, got {self.p!r}")

    @property
    def h(self) -> int:
        return (self.p - 1) // 2

    def block_of(self, x: int) -> int:
        """Index j of the block [jp - h, jp + h] containing x."""
        return (x + self.h) // self.p


@lru_cache(maxsize=None)
def modulus(p: int | OddModulus) -> OddModulus:
    return p if isinstance(p, OddModulus) else OddModulus(p)


def half(p: int) -> int:
    return modulus(p).h


def reflect(parts: Sequence[int], p: int, k: int) -> Partition:
    """Reflect through the multiple ``k * p``, which must exceed every part."""
    modulus(p)
    top = k * p
    if parts and top <= parts[0]:
        raise ValueError(f"{k}*{p} must exceed the largest part {parts[0]}")
    return Partition(top - x for x in reversed(parts))


def partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n, lexicographically decreasing."""
    if n < 0:
        return
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first, *rest)


def strict_partitions_of(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of n into distinct parts, lexicographically decreasing."""
    if max_part is None or max_part > n:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(max_part, 0, -1):
        if first * (first + 1) // 2 < n:
            break
        for rest in strict_partitions_of(n - first, first - 1):
            yield (first, *rest)


def subsets_in_window(a: int, b: int) -> Iterator[tuple[int, ...]]:
    """Every strict partition with all parts in [max(a, 1), b]."""
    values = list(range(b, max(a, 1) - 1, -1))
    m = len(values)
    for mask in range(1 << m):
        yield tuple(values[t] for t in range(m) if mask >> t & 1)


def format_partition(parts: Sequence[int]) -> str:
    """Comma separated parts; the empty partition is the empty string."""
    return ",".join(str(x) for x in parts)


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "()", "[]"):
        return Partition()
    text = text.strip("()[]")
    try:
        parts = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"cannot parse partition {text!r}") from None
    return Partition(parts)
