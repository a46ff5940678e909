"""Crystal operators on S_p.

A member of S_p is cut into blocks around the multiples of p, every block
above block 0 is folded into its plus and minus halves, and the operators act
on the resulting tensor product of small window precrystals:

* indices i < h use the factors ordered from the top block down as
  plus_N, minus_N, ..., plus_1, minus_1, block_0;
* index h pairs each minus half with the plus half just below it, giving
  factors in the windows [(j-1)p + 1, jp - 1].

The factor sequence is cut off after the first empty block above the support
(``buffer`` controls how many empty blocks are kept). One is enough: empty
plus and minus halves have (eps, phi) = (0, 1) and (1, 0) at i = 0 and (0, 0)
at every other index, so an empty pair contributes "+-" to the sign word and
cancels on itself, and an empty concatenated window is inert at i = h. The
single empty block is kept only so that the top plus half has a minus half
to pair with at i = h.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Sequence

from .block_decomp import decompose, recompose
from .partitions import Partition, add_part, half, modulus, remove_part, restrict, union
from .precrystal import Precrystal, TensorData, TensorProduct, crystal_graph, tensor_phi_eps
from .sp_class import NotInClassError, in_sp

Parts = Sequence[int]


def _move(parts: Parts, old: int, new: int) -> Partition:
    return add_part(remove_part(parts, old), new)


class PlusBlock(Precrystal):
    """Strict partitions in [jp + 1, jp + h]; index 0 adds jp + 1, index i slides jp + i up by one."""

    def __init__(self, p: int, j: int):
        self.p, self.j, self.h = p, j, half(p)
        self.base = j * p
        self.indices = tuple(range(self.h))

    def f(self, b, i):
        c = self.base
        if i == 0:
            return None if c + 1 in b else add_part(b, c + 1)
        if c + i in b and c + i + 1 not in b:
            return _move(b, c + i, c + i + 1)
        return None

    def e(self, b, i):
        c = self.base
        if i == 0:
            return remove_part(b, c + 1) if c + 1 in b else None
        if c + i + 1 in b and c + i not in b:
            return _move(b, c + i + 1, c + i)
        return None

    def phi(self, b, i):
        c = self.base
        if i == 0:
            return int(c + 1 not in b)
        return int(c + i in b and c + i + 1 not in b)

    def eps(self, b, i):
        c = self.base
        if i == 0:
            return int(c + 1 in b)
        return int(c + i + 1 in b and c + i not in b)


class MinusBlock(Precrystal):
    """Strict partitions in [jp - h, jp - 1]; index 0 removes jp - 1, index i slides jp - i - 1 up by one."""

    def __init__(self, p: int, j: int):
        if j < 1:
            raise ValueError("minus halves exist only for blocks j >= 1")
        self.p, self.j, self.h = p, j, half(p)
        self.base = j * p
        self.indices = tuple(range(self.h))

    def f(self, b, i):
        c = self.base
        if i == 0:
            return remove_part(b, c - 1) if c - 1 in b else None
        if c - i not in b and c - i - 1 in b:
            return _move(b, c - i - 1, c - i)
        return None

    def e(self, b, i):
        c = self.base
        if i == 0:
            return None if c - 1 in b else add_part(b, c - 1)
        if c - i in b and c - i - 1 not in b:
            return _move(b, c - i, c - i - 1)
        return None

    def phi(self, b, i):
        c = self.base
        if i == 0:
            return int(c - 1 in b)
        return int(c - i not in b and c - i - 1 in b)

    def eps(self, b, i):
        c = self.base
        if i == 0:
            return int(c - 1 not in b)
        return int(c - i in b and c - i - 1 not in b)


class ConcatBlock(Precrystal):
    """Members of S_p in [(j-1)p + 1, jp - 1].

    Indices below h act through the minus half of block j tensored with the
    plus half of block j - 1; index h moves (j-1)p + h up to jp - h.
    """

    def __init__(self, p: int, j: int):
        if j < 1:
            raise ValueError("concatenated windows start at j = 1")
        self.p, self.j, self.h = p, j, half(p)
        self.lo, self.hi = (j - 1) * p + 1, j * p - 1
        self.minus = minus_block(p, j)
        self.plus = plus_block(p, j - 1)
        self.pair = TensorProduct([self.minus, self.plus])
        self.indices = tuple(range(self.h + 1))

    def split(self, b) -> tuple[Partition, Partition]:
        h = self.h
        return restrict(b, self.hi - h + 1, self.hi), restrict(b, self.lo, self.lo + h - 1)

    def _source(self):
        return (self.j - 1) * self.p + self.h

    def f(self, b, i):
        if i == self.h:
            src, dst = self._source(), self.j * self.p - self.h
            if src in b and dst not in b:
                return _move(b, src, dst)
            return None
        out = self.pair.f(self.split(b), i)
        return None if out is None else union(*out)

    def e(self, b, i):
        if i == self.h:
            src, dst = self._source(), self.j * self.p - self.h
            if dst in b and src not in b:
                return _move(b, dst, src)
            return None
        out = self.pair.e(self.split(b), i)
        return None if out is None else union(*out)

    def phi(self, b, i):
        if i == self.h:
            return int(self._source() in b and self.j * self.p - self.h not in b)
        return self.pair.phi(self.split(b), i)

    def eps(self, b, i):
        if i == self.h:
            return int(self.j * self.p - self.h in b and self._source() not in b)
        return self.pair.eps(self.split(b), i)


@lru_cache(maxsize=None)
def plus_block(p: int, j: int) -> PlusBlock:
    return PlusBlock(p, j)


@lru_cache(maxsize=None)
def minus_block(p: int, j: int) -> MinusBlock:
    return MinusBlock(p, j)


@lru_cache(maxsize=None)
def concat_block(p: int, j: int) -> ConcatBlock:
    return ConcatBlock(p, j)


def top_block(parts: Parts, p: int) -> int:
    """Index of the highest block meeting the partition (0 when empty)."""
    return modulus(p).block_of(parts[0]) if parts else 0


class Halves:
    """The folded form of a member of S_p: plus[j] for j >= 0 and minus[j] for j >= 1."""

    def __init__(self, parts: Parts, p: int, top: int):
        self.p, self.top = p, top
        h = half(p)
        self.plus = [restrict(parts, 1, h) if h >= 1 else Partition()]
        self.minus = [Partition()]
        for j in range(1, top + 1):
            block = restrict(parts, j * p - h, j * p + h)
            pl, mi = decompose(block, p, j)
            self.plus.append(pl)
            self.minus.append(mi)

    def assemble(self) -> Partition:
        blocks = [self.plus[0]]
        for j in range(1, self.top + 1):
            blocks.append(recompose(self.plus[j], self.minus[j], self.p, j))
        return union(*blocks)


class SpCrystal(Precrystal):
    """The crystal structure on S_p, indices 0..h."""

    def __init__(self, p: int, buffer: int = 1):
        self.p = modulus(p).p
        self.h = half(p)
        self.indices = tuple(range(self.h + 1))
        if buffer < 1:
            raise ValueError("at least one empty block must follow the support")
        self.buffer = buffer

    def check(self, parts: Parts) -> Partition:
        parts = Partition(parts)
        if not in_sp(parts, self.p):
            raise NotInClassError(f"{tuple(parts)} is not in S_{self.p}")
        return parts

    def halves(self, parts: Parts) -> Halves:
        return Halves(parts, self.p, top_block(parts, self.p) + self.buffer)

    def _factors(self, hv: Halves, i: int):
        p, top = self.p, hv.top
        if i < self.h:
            seq = []
            for j in range(top, 0, -1):
                seq.append((plus_block(p, j), hv.plus[j], ("plus", j)))
                seq.append((minus_block(p, j), hv.minus[j], ("minus", j)))
            seq.append((plus_block(p, 0), hv.plus[0], ("plus", 0)))
            return seq
        if hv.plus[top]:
            raise AssertionError("the buffer block must be empty")
        return [
            (concat_block(p, j), union(hv.minus[j], hv.plus[j - 1]), ("concat", j))
            for j in range(top, 0, -1)
        ]

    def data(self, parts: Parts, i: int) -> TensorData:
        hv = self.halves(self.check(parts))
        seq = self._factors(hv, i)
        return tensor_phi_eps([(c.eps(x, i), c.phi(x, i)) for c, x, _ in seq])

    def eps(self, parts, i):
        return self.data(parts, i).eps

    def phi(self, parts, i):
        return self.data(parts, i).phi

    def act(self, parts: Parts, i: int, raising: bool):
        """Apply e_i (raising) or f_i; returns (result, touched factor label) or (None, None)."""
        if i not in self.indices:
            raise ValueError(f"index {i} outside 0..{self.h}")
        hv = self.halves(self.check(parts))
        seq = self._factors(hv, i)
        d = tensor_phi_eps([(c.eps(x, i), c.phi(x, i)) for c, x, _ in seq])
        if (d.eps if raising else d.phi) == 0:
            return None, None
        k = d.k_e if raising else d.k_f
        c, x, label = seq[k]
        new = c.e(x, i) if raising else c.f(x, i)
        if new is None:
            return None, None
        kind, j = label
        if kind == "plus":
            hv.plus[j] = new
        elif kind == "minus":
            hv.minus[j] = new
        else:
            hv.minus[j], hv.plus[j - 1] = c.split(new)
        return hv.assemble(), label

    def f(self, parts, i):
        return self.act(parts, i, raising=False)[0]

    def e(self, parts, i):
        return self.act(parts, i, raising=True)[0]


def sp_lower(parts: Parts, p: int, i: int) -> Partition | None:
    return SpCrystal(p).f(parts, i)


def sp_raise(parts: Parts, p: int, i: int) -> Partition | None:
    return SpCrystal(p).e(parts, i)


def sp_lower_rebracketed(parts: Parts, p: int, i: int) -> Partition | None:
    """f_i for i < h computed with the minus half of each block grouped with
    the plus half below it, the top plus half standing alone."""
    cr = SpCrystal(p)
    h = cr.h
    if not 0 <= i < h:
        raise ValueError("only indices below h can be regrouped")
    hv = cr.halves(cr.check(parts))
    top = hv.top
    factors = [plus_block(p, top)] + [concat_block(p, j) for j in range(top, 0, -1)]
    elems = [hv.plus[top]] + [union(hv.minus[j], hv.plus[j - 1]) for j in range(top, 0, -1)]
    out = TensorProduct(factors).f(tuple(elems), i)
    if out is None:
        return None
    hv.plus[top] = out[0]
    for j, c in zip(range(top, 0, -1), out[1:]):
        hv.minus[j], hv.plus[j - 1] = concat_block(p, j).split(c)
    return hv.assemble()


def block_factorize(parts: Parts, p: int) -> list[Partition]:
    """Members of the windows [(j-1)p + 1, jp - 1], listed from the top j = N + 1 down to j = 1."""
    cr = SpCrystal(p)
    hv = cr.halves(cr.check(parts))
    return [union(hv.minus[j], hv.plus[j - 1]) for j in range(hv.top, 0, -1)]


def block_unfactorize(pieces: Sequence[Parts], p: int) -> Partition:
    """Inverse of ``block_factorize``."""
    top = len(pieces)
    hv = Halves((), p, top)
    for j, c in zip(range(top, 0, -1), pieces):
        hv.minus[j], hv.plus[j - 1] = concat_block(p, j).split(c)
    return hv.assemble()


def one_box_audit(parts: Parts, p: int, i: int) -> dict:
    """Check that f_i adds exactly one box, stays in S_p, and that the touched
    block grows by one box when reassembled."""
    cr = SpCrystal(p)
    parts = cr.check(parts)
    new, label = cr.act(parts, i, raising=False)
    if new is None:
        return {"defined": False}
    report = {
        "defined": True,
        "result": new,
        "size_step": new.size - parts.size == 1,
        "in_class": in_sp(new, p),
        "factor": label,
    }
    kind, j = label
    h = half(p)
    if kind == "concat":
        blocks = [j, j - 1]
    else:
        blocks = [j]
    steps = []
    for b in blocks:
        lo, hi = max(b * p - h, 1), b * p + h
        steps.append(restrict(new, lo, hi).size - restrict(parts, lo, hi).size)
    report["block_steps"] = steps
    report["block_ok"] = sum(steps) == 1 if kind == "concat" else steps == [1]
    return report


def sp_graph(p: int, depth: int):
    cr = SpCrystal(p)
    return crystal_graph(Partition(), depth, cr.f, cr.indices, sort_key=lambda lam: tuple(-x for x in lam))
