"""Column crystals of Kashiwara-Nakashima type, their Kyoto path model, and
the map that identifies columns of height h with windows of S_p.

Letters are the integers 1..n, 0 and -n..-1, ordered
1 < 2 < ... < n < 0 < -n < ... < -1. A word of length s is stored as a tuple
read from the left.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .partitions import Partition, half, modulus
from .precrystal import Precrystal, TensorProduct, crystal_graph

Word = tuple[int, ...]


def letter_rank(x: int, n: int) -> int:
    if x > 0:
        return x
    if x == 0:
        return n + 1
    return 2 * n + 2 + x


def letters(n: int) -> list[int]:
    return list(range(1, n + 1)) + [0] + list(range(-n, 0))


class InvariantError(AssertionError):
    """An operator produced something outside the structure it acts on."""


class LetterCrystal(Precrystal):
    """The letters of B^{n,1} with indices 1..n (index 0 acts on words)."""

    def __init__(self, n: int):
        if n < 1:
            raise ValueError("n must be positive")
        self.n = n
        self.indices = tuple(range(1, n + 1))

    def f(self, x, i):
        n = self.n
        if 1 <= i < n:
            if x == i:
                return i + 1
            if x == -(i + 1):
                return -i
            return None
        if i == n:
            if x == n:
                return 0
            if x == 0:
                return -n
            return None
        raise ValueError(f"letter index {i} outside 1..{n}")

    def e(self, x, i):
        n = self.n
        if 1 <= i < n:
            if x == i + 1:
                return i
            if x == -i:
                return -(i + 1)
            return None
        if i == n:
            if x == -n:
                return 0
            if x == 0:
                return n
            return None
        raise ValueError(f"letter index {i} outside 1..{n}")

    def phi(self, x, i):
        if i == self.n:
            return {self.n: 2, 0: 1}.get(x, 0)
        return int(x in (i, -(i + 1)))

    def eps(self, x, i):
        if i == self.n:
            return {-self.n: 2, 0: 1}.get(x, 0)
        return int(x in (i + 1, -i))


@lru_cache(maxsize=None)
def letter_crystal(n: int) -> LetterCrystal:
    return LetterCrystal(n)


def letter_ops(x: int, n: int, i: int, raising: bool = False) -> int | None:
    c = letter_crystal(n)
    if i == 0:
        if raising:
            return -1 if x == 1 else None
        return 1 if x == -1 else None
    return c.e(x, i) if raising else c.f(x, i)


def word_membership(word: Sequence[int], n: int, s: int) -> bool:
    """Columns of B^{n,s}: weakly increasing letters, repeats only of 0, and
    whenever t sits at position k and -t at position l > k, l - k > s - t."""
    word = tuple(word)
    if len(word) != s:
        return False
    if any(not (-n <= x <= n) for x in word):
        return False
    for a, b in zip(word, word[1:]):
        ra, rb = letter_rank(a, n), letter_rank(b, n)
        if ra > rb or (ra == rb and a != 0):
            return False
    pos = {x: k for k, x in enumerate(word, start=1) if x != 0}
    for t in range(1, n + 1):
        if t in pos and -t in pos and pos[-t] - pos[t] <= s - t:
            return False
    return True


def all_words(n: int, s: int) -> list[Word]:
    """Every member of B^{n,s}, in increasing lexicographic order of letter ranks."""
    ordered = letters(n)
    out: list[Word] = []

    def walk(prefix: list[int], start: int):
        if len(prefix) == s:
            if word_membership(prefix, n, s):
                out.append(tuple(prefix))
            return
        for idx in range(start, len(ordered)):
            x = ordered[idx]
            prefix.append(x)
            walk(prefix, idx if x == 0 else idx + 1)
            prefix.pop()

    walk([], 0)
    return out


class KNCrystal(Precrystal):
    """B^{n,s} with indices 0..n. Indices 1..n act letter by letter through the
    tensor rule; index 0 cycles a trailing -1 to a leading 1."""

    def __init__(self, n: int, s: int):
        if s < 1:
            raise ValueError("s must be positive")
        self.n, self.s = n, s
        self.indices = tuple(range(n + 1))
        self.tensor = TensorProduct([letter_crystal(n)] * s)

    def check(self, word) -> Word:
        word = tuple(word)
        if not word_membership(word, self.n, self.s):
            raise ValueError(f"{list(word)} is not in B^({self.n},{self.s})")
        return word

    def _validate(self, word, op):
        if word is not None and not word_membership(word, self.n, self.s):
            raise InvariantError(f"{op} left B^({self.n},{self.s}) with {list(word)}")
        return word

    def f(self, word, i):
        word = self.check(word)
        if i == 0:
            return (1, *word[:-1]) if word[-1] == -1 else None
        return self._validate(self.tensor.f(word, i), f"f_{i}")

    def e(self, word, i):
        word = self.check(word)
        if i == 0:
            return (*word[1:], -1) if word[0] == 1 else None
        return self._validate(self.tensor.e(word, i), f"e_{i}")

    def phi(self, word, i):
        if i == 0:
            return int(word[-1] == -1)
        return self.tensor.phi(tuple(word), i)

    def eps(self, word, i):
        if i == 0:
            return int(word[0] == 1)
        return self.tensor.eps(tuple(word), i)


def word_ops(word: Sequence[int], n: int, s: int, i: int, raising: bool = False) -> Word | None:
    c = KNCrystal(n, s)
    return c.e(word, i) if raising else c.f(word, i)


def ground_word(s: int) -> Word:
    return (0,) * s


# ---------------------------------------------------------------------------
# identification with windows of S_p


def r_map(box: int, p: int, j: int) -> int:
    """Place a nonzero letter in the window [(j-1)p + 1, jp - 1]: positive
    letters land just below jp, negative ones just above (j-1)p."""
    h = half(p)
    if box == 0 or not -h <= box <= h:
        raise ValueError(f"letter {box} is not a nonzero letter of B^({h},s)")
    if j < 1:
        raise ValueError("j must be at least 1")
    if box > 0:
        return j * p - (h + 1 - box)
    return (j - 1) * p + (h + 1 + box)


def psi(word: Sequence[int], p: int, j: int) -> Partition:
    """Image of a column: positive letters from the right, then negative letters from the right, zeros dropped."""
    h = half(p)
    word = tuple(word)
    if not word_membership(word, h, len(word)):
        raise ValueError(f"{list(word)} is not a column of B^({h},{len(word)})")
    pos = [x for x in word if x > 0]
    neg = [x for x in word if x < 0]
    return Partition([r_map(x, p, j) for x in reversed(pos)] + [r_map(x, p, j) for x in reversed(neg)])


def psi_inverse(parts: Sequence[int], p: int, j: int, s: int) -> Word:
    h = half(p)
    c = j * p
    pos = sorted(x - c + h + 1 for x in parts if x > c - h - 1)
    neg = sorted(x - (j - 1) * p - h - 1 for x in parts if x <= c - h - 1)
    zeros = s - len(pos) - len(neg)
    if zeros < 0:
        raise ValueError("too many parts for the column length")
    return tuple(pos) + (0,) * zeros + tuple(neg)


# ---------------------------------------------------------------------------
# Kyoto paths


class _Tail(Precrystal):
    """Stand-in for everything to the left of the buffer: no raising, and phi
    equal to eps of the ground word so the buffer's minus signs are absorbed."""

    def __init__(self, phis: dict[int, int]):
        self.phis = phis

    def e(self, b, i):
        return None

    def f(self, b, i):
        raise InvariantError("lowering operator reached past the buffer of ground words")

    def eps(self, b, i):
        return 0

    def phi(self, b, i):
        return self.phis[i]


class KyotoPath(Precrystal):
    """Semi-infinite paths ... (x) x_2 (x) x_1 in B^{n,s} that agree with the
    ground word far to the left.

    A path is stored as the tuple (x_1, x_2, ..., x_N) with trailing ground
    words removed; the empty tuple is the ground path.
    """

    def __init__(self, n: int, s: int):
        self.n, self.s = n, s
        self.column = KNCrystal(n, s)
        self.indices = self.column.indices
        self.ground = ground_word(s)
        self.tail = _Tail({i: self.column.eps(self.ground, i) for i in self.indices})

    def _seq(self, path):
        words = list(reversed(path))
        return [self.ground] + words

    def _normalize(self, seq) -> tuple[Word, ...]:
        path = list(reversed(seq))
        while path and path[-1] == self.ground:
            path.pop()
        return tuple(path)

    def _op(self, path, i, raising):
        seq = self._seq(path)
        factors = [self.tail] + [self.column] * len(seq)
        prod = TensorProduct(factors)
        out = prod.e((None, *seq), i) if raising else prod.f((None, *seq), i)
        return None if out is None else self._normalize(out[1:])

    def f(self, path, i):
        return self._op(path, i, raising=False)

    def e(self, path, i):
        return self._op(path, i, raising=True)

    def eps(self, path, i):
        seq = self._seq(path)
        return TensorProduct([self.tail] + [self.column] * len(seq)).eps((None, *seq), i)

    def phi(self, path, i):
        seq = self._seq(path)
        return TensorProduct([self.tail] + [self.column] * len(seq)).phi((None, *seq), i)


def kyoto_ground_check(p: int, s: int) -> dict:
    """eps and phi of the ground word of B^{h,s}, index by index."""
    h = half(p)
    c = KNCrystal(h, s)
    g = ground_word(s)
    eps = {i: c.eps(g, i) for i in c.indices}
    phi = {i: c.phi(g, i) for i in c.indices}
    return {"eps": eps, "phi": phi, "balanced": eps == phi}


def kyoto_layer_counts(p: int, s: int, depth: int) -> list[int]:
    modulus(p)
    k = KyotoPath(half(p), s)
    g = crystal_graph((), depth, k.f, k.indices, sort_key=repr)
    return [len(layer) for layer in g.layers]


def kn_graph(n: int, s: int, depth: int):
    c = KNCrystal(n, s)
    order = {x: r for r, x in enumerate(letters(n))}
    return crystal_graph(ground_word(s), depth, c.f, c.indices,
                         sort_key=lambda w: tuple(order[x] for x in w))
