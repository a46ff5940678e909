"""Precrystals, their tensor products and crystal graphs.

A precrystal is any object with raising/lowering operators ``e(b, i)`` and
``f(b, i)`` that return ``None`` when undefined. ``eps``/``phi`` default to
counting how often the operator can be iterated, and subclasses override them
when a closed form is cheaper.

Tensor products follow the convention in which the lowering operator acts on
the left factor of ``b1 (x) b2`` exactly when phi(b1) > eps(b2).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Sequence


class Precrystal:
    indices: tuple[int, ...] = ()

    def e(self, b, i: int):
        raise NotImplementedError

    def f(self, b, i: int):
        raise NotImplementedError

    def eps(self, b, i: int) -> int:
        n = 0
        b = self.e(b, i)
        while b is not None:
            n += 1
            b = self.e(b, i)
        return n

    def phi(self, b, i: int) -> int:
        n = 0
        b = self.f(b, i)
        while b is not None:
            n += 1
            b = self.f(b, i)
        return n


class Unit(Precrystal):
    """The one-element precrystal on which every operator is undefined."""

    ELEMENT = ()

    def __init__(self, indices: Iterable[int] = ()):
        self.indices = tuple(indices)

    def e(self, b, i):
        return None

    def f(self, b, i):
        return None

    def eps(self, b, i):
        return 0

    def phi(self, b, i):
        return 0


@dataclass(frozen=True)
class TensorData:
    eps: int
    phi: int
    k_e: int | None
    k_f: int | None


def tensor_phi_eps(pairs: Sequence[tuple[int, int]]) -> TensorData:
    """eps/phi of a tensor product from the per-factor (eps, phi) values.

    eps_k = eps(b_k) - sum_{m<k} (phi - eps)(b_m) and
    phi_k = phi(b_k) + sum_{m>k} (phi - eps)(b_m). The maximum of each is the
    value for the product; ``k_e`` is the first index attaining it and ``k_f``
    the last. Indices are 0-based; both are None for an empty product.
    """
    if not pairs:
        return TensorData(0, 0, None, None)
    best_e, k_e = None, None
    run = 0
    for k, (e, p) in enumerate(pairs):
        v = e - run
        if best_e is None or v > best_e:
            best_e, k_e = v, k
        run += p - e
    best_f, k_f = None, None
    run = 0
    for k in range(len(pairs) - 1, -1, -1):
        e, p = pairs[k]
        v = p + run
        if best_f is None or v > best_f:
            best_f, k_f = v, k
        run += p - e
    return TensorData(best_e, best_f, k_e, k_f)


def signature_reduce(pairs: Sequence[tuple[int, int]]) -> TensorData:
    """Same data computed by bracketing.

    Each factor contributes eps minus signs followed by phi plus signs; every
    plus immediately followed by a minus cancels with it until none remain.
    The surviving word is (-)^eps (+)^phi; the lowering operator acts at the
    leftmost surviving plus and the raising operator at the rightmost minus.
    """
    stack: list[tuple[str, int]] = []
    for k, (e, p) in enumerate(pairs):
        for _ in range(e):
            if stack and stack[-1][0] == "+":
                stack.pop()
            else:
                stack.append(("-", k))
        for _ in range(p):
            stack.append(("+", k))
    minus = [k for s, k in stack if s == "-"]
    plus = [k for s, k in stack if s == "+"]
    return TensorData(
        len(minus), len(plus),
        minus[-1] if minus else None,
        plus[0] if plus else None,
    )


class TensorProduct(Precrystal):
    """Tensor product of precrystals; elements are tuples with one entry per factor."""

    def __init__(self, factors: Sequence[Precrystal]):
        self.factors = tuple(factors)
        common = None
        for c in self.factors:
            common = set(c.indices) if common is None else common & set(c.indices)
        self.indices = tuple(sorted(common or ()))

    def data(self, b, i: int) -> TensorData:
        return tensor_phi_eps([(c.eps(x, i), c.phi(x, i)) for c, x in zip(self.factors, b)])

    def eps(self, b, i):
        return self.data(b, i).eps

    def phi(self, b, i):
        return self.data(b, i).phi

    def _act(self, b, i, k, op):
        if k is None:
            return None
        new = op(self.factors[k], b[k], i)
        if new is None:
            return None
        return (*b[:k], new, *b[k + 1:])

    def e(self, b, i):
        d = self.data(b, i)
        if d.eps == 0:
            return None
        return self._act(b, i, d.k_e, lambda c, x, i: c.e(x, i))

    def f(self, b, i):
        d = self.data(b, i)
        if d.phi == 0:
            return None
        return self._act(b, i, d.k_f, lambda c, x, i: c.f(x, i))


def tensor_lower(factors: Sequence[Precrystal], b: Sequence, i: int):
    return TensorProduct(factors).f(tuple(b), i)


def tensor_raise(factors: Sequence[Precrystal], b: Sequence, i: int):
    return TensorProduct(factors).e(tuple(b), i)


@dataclass
class CrystalGraph:
    layers: list[list]
    edges: list[tuple[Hashable, int, Hashable]]

    def vertices(self) -> list:
        return [v for layer in self.layers for v in layer]

    def to_dot(self, label: Callable[[Hashable], str] = str, name: str = "crystal") -> str:
        ids = {v: f"v{k}" for k, v in enumerate(self.vertices())}
        lines = [f"digraph {name} {{"]
        for v, vid in ids.items():
            text = label(v).replace('"', '\\"')
            lines.append(f'  {vid} [label="{text}"];')
        for src, i, dst in self.edges:
            lines.append(f'  {ids[src]} -> {ids[dst]} [label="{i}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def crystal_graph(
    seed: Hashable,
    depth: int,
    lower: Callable[[Hashable, int], Hashable | None],
    indices: Iterable[int],
    sort_key: Callable | None = None,
) -> CrystalGraph:
    """Breadth-first layers from ``seed`` under the lowering operators.

    Layer n holds everything first reached after n steps. Layers are sorted
    with ``sort_key`` so the output does not depend on set iteration order.
    """
    indices = tuple(indices)
    seen = {seed}
    layers = [[seed]]
    edges = []
    frontier = [seed]
    for _ in range(depth):
        nxt = []
        for b in frontier:
            for i in indices:
                c = lower(b, i)
                if c is None:
                    continue
                edges.append((b, i, c))
                if c not in seen:
                    seen.add(c)
                    nxt.append(c)
        if sort_key is not None:
            nxt.sort(key=sort_key)
        layers.append(nxt)
        frontier = nxt
    return CrystalGraph(layers, edges)


def reachable(seed: Hashable, lower: Callable, indices: Iterable[int]) -> set:
    """Everything reachable from ``seed``; only for finite precrystals."""
    indices = tuple(indices)
    seen = {seed}
    queue = deque([seed])
    while queue:
        b = queue.popleft()
        for i in indices:
            c = lower(b, i)
            if c is not None and c not in seen:
                seen.add(c)
                queue.append(c)
    return seen
