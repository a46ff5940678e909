"""Schur-type classes built from S_p by a blockwise insertion map.

``beta0`` rewrites a block around p, spreading repeated copies of p into
distinct parts. Applying it block by block sends S_p injectively into strict
partitions; the image is a Schur-type class. Because the defining condition
only couples neighbouring blocks, the image is cut out by finitely many
forbidden consecutive patterns and their upward p-shifts, which
``derive_forbidden_set`` computes.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .classes import PartitionClass, avoids_shifted, is_strict, strict_class
from .partitions import Partition, half, matches_subpattern, shift, union
from .sp_class import NotInClassError, in_sp, sp_window_members

Parts = Sequence[int]


def beta0(parts: Parts, p: int) -> Partition:
    """Insertion map on members of S_p with parts in [p - h, p + h]."""
    h = half(p)
    parts = Partition(parts)
    if any(not (p - h <= x <= p + h) for x in parts) or not in_sp(parts, p):
        raise NotInClassError(f"{tuple(parts)} is not a member of S_{p} in [{p - h}, {p + h}]")
    m = Counter(parts)
    z = m[p]
    mu = [p + z - 1 - 2 * t for t in range(z)]

    def push(offset_from: int, by: int):
        for k, x in enumerate(mu):
            d = x - p
            if abs(d) >= offset_from:
                mu[k] = x + by if d > 0 else x - by

    for i in range(1, h + 1):
        up, down = m[p + i] > 0, m[p - i] > 0
        if up and down:
            cu, cd = mu.count(p + i), mu.count(p - i)
            if cu != cd:
                raise AssertionError(f"unbalanced insertion at offset {i} for {tuple(parts)}")
            push(i, 2)
            mu += [p + cu + i, p - cu - i]
        elif up or down:
            push(i, 1)
            mu.append(p + i if up else p - i)
    return Partition(sorted(mu, reverse=True))


def beta_shifted(parts: Parts, p: int, j: int) -> Partition:
    """Conjugate of ``beta0`` by (j - 1) p-shifts, acting on block j."""
    if j < 0:
        raise ValueError("block index must be non-negative")
    down = shift(parts, p, -(j - 1)) if parts else Partition()
    return shift(beta0(down, p), p, j - 1) if parts else Partition()


@lru_cache(maxsize=None)
def beta_table(p: int) -> dict[tuple, tuple]:
    """Image of every block-1 member of S_p under ``beta0``, mapped back to its preimage."""
    h = half(p)
    table = {}
    for lam in sp_window_members(p, p - h, p + h):
        img = tuple(beta0(lam, p))
        if img in table:
            raise AssertionError(f"insertion is not injective at {img}")
        table[img] = tuple(lam)
    return table


def blocks_of(parts: Parts, p: int) -> dict[int, Partition]:
    h = half(p)
    out: dict[int, list[int]] = defaultdict(list)
    for x in parts:
        out[(x + h) // p].append(x)
    return {j: Partition(v) for j, v in out.items()}


def apply_beta(parts: Parts, p: int) -> Partition:
    """Blockwise insertion of a member of S_p."""
    if not in_sp(parts, p):
        raise NotInClassError(f"{tuple(parts)} is not in S_{p}")
    return union(*(beta_shifted(b, p, j) for j, b in blocks_of(parts, p).items()))


def beta_preimage(parts: Parts, p: int) -> Partition | None:
    """The member of S_p whose blockwise insertion is ``parts``, or None."""
    if not is_strict(parts):
        return None
    table = beta_table(p)
    pieces = []
    for j, b in blocks_of(parts, p).items():
        key = tuple(x - (j - 1) * p for x in b)
        pre = table.get(key)
        if pre is None:
            return None
        pieces.append([x + (j - 1) * p for x in pre])
    nu = union(*pieces)
    return nu if in_sp(nu, p) else None


def schur_p_membership(parts: Parts, p: int) -> bool:
    """Membership in the image of S_p under blockwise insertion."""
    return beta_preimage(parts, p) is not None


def schur_image_class(p: int) -> PartitionClass:
    return PartitionClass(
        "schur", lambda lam: schur_p_membership(lam, p), base=strict_class(), params={"p": p}
    )


# ---------------------------------------------------------------------------
# forbidden patterns


@dataclass
class ForbiddenSet:
    """Forbidden consecutive patterns for the image class.

    ``constructed`` lists every bad configuration of the two-block windows
    (the complement of the image, possibly far from minimal). ``minimal``
    holds the minimal forbidden patterns, each moved down by multiples of p as
    far as it stays forbidden; avoiding these and all their upward p-shifts
    characterises the class. ``gap`` and ``exceptional`` split ``minimal``
    into patterns of h + 1 parts spanning at most p (the ones a gap rule
    across h steps can express) and the rest.
    """

    p: int
    constructed: list[tuple[int, ...]]
    minimal: list[tuple[int, ...]]
    gap: list[tuple[int, ...]] = field(default_factory=list)
    exceptional: list[tuple[int, ...]] = field(default_factory=list)
    complete: bool = True


def _good_configs(p: int, lo: int, hi: int) -> tuple[list[tuple], list[tuple]]:
    """Strict configurations in [lo, hi] split into (good, bad)."""
    good, bad = [], []
    values = list(range(hi, lo - 1, -1))
    for mask in range(1 << len(values)):
        conf = tuple(values[t] for t in range(len(values)) if mask >> t & 1)
        (good if schur_p_membership(conf, p) else bad).append(conf)
    return good, bad


def _minimal_forbidden(good: list[tuple], bad: list[tuple]) -> tuple[set, bool]:
    """Patterns whose every extension inside the window is bad, minimal under
    taking consecutive runs. Also reports whether every bad configuration
    contains one of them."""
    allowed = set()
    for conf in good:
        n = len(conf)
        for a in range(n + 1):
            for b in range(a, n + 1):
                allowed.add(conf[a:b])
    forbidden = set()
    for conf in bad:
        n = len(conf)
        for a in range(n):
            for b in range(a + 1, n + 1):
                run = conf[a:b]
                if run not in allowed:
                    forbidden.add(run)
    minimal = {mu for mu in forbidden if mu[1:] not in forbidden and mu[:-1] not in forbidden}
    complete = all(
        any(matches_subpattern(conf, mu) for mu in minimal) for conf in bad
    )
    return minimal, complete


@lru_cache(maxsize=None)
def derive_forbidden_set(p: int) -> ForbiddenSet:
    """Forbidden patterns for the image class, found by exhausting the two
    lowest two-block windows [1, p + h] and [p - h, 2p + h]."""
    h = half(p)
    good_hi, bad_hi = _good_configs(p, p - h, 2 * p + h)
    good_lo, bad_lo = _good_configs(p, 1, p + h)
    min_hi, complete_hi = _minimal_forbidden(good_hi, bad_hi)
    min_lo, complete_lo = _minimal_forbidden(good_lo, bad_lo)
    reps = set(min_lo)
    for mu in min_hi:
        down = tuple(x - p for x in mu)
        if down[-1] >= 1 and down in min_lo:
            continue
        reps.add(mu)
    # lower representatives must stay forbidden one block higher
    for mu in reps & min_lo:
        up = tuple(x + p for x in mu)
        if up not in min_hi and not any(matches_subpattern(up, nu) for nu in min_hi):
            raise AssertionError(f"pattern {mu} is not forbidden one block higher")
    minimal = sorted(reps, key=lambda mu: (len(mu), mu))
    gap = [mu for mu in minimal if len(mu) == h + 1 and mu[0] - mu[-1] <= p]
    exceptional = [mu for mu in minimal if mu not in gap]
    constructed = sorted(set(bad_lo) | set(bad_hi), key=lambda mu: (len(mu), mu))
    return ForbiddenSet(p, constructed, minimal, gap, exceptional, complete_hi and complete_lo)


def schur_avoidance_membership(parts: Parts, p: int) -> bool:
    """Membership as avoidance of the derived patterns and their p-shifts."""
    return is_strict(parts) and avoids_shifted(parts, derive_forbidden_set(p).minimal, p)


def schur_avoidance_class(p: int) -> PartitionClass:
    return PartitionClass("schur-avoid", lambda lam: schur_avoidance_membership(lam, p), params={"p": p})


def pattern_templates(patterns: Iterable[Sequence[int]]) -> list[str]:
    """Compress patterns differing in one position by a contiguous range into
    templates such as ``14,9..13,8,6``."""
    remaining = sorted({tuple(mu) for mu in patterns}, key=lambda mu: (len(mu), mu))
    used: set = set()
    out: list[tuple[tuple, str]] = []
    for mu in remaining:
        if mu in used:
            continue
        best = [mu]
        best_pos = None
        for pos in range(len(mu)):
            run = [mu]
            v = mu[pos] + 1
            while True:
                cand = mu[:pos] + (v,) + mu[pos + 1:]
                if cand in used or cand not in remaining or not is_strict(cand):
                    break
                run.append(cand)
                v += 1
            if len(run) > len(best):
                best, best_pos = run, pos
        used.update(best)
        if best_pos is None:
            text = ",".join(map(str, mu))
        else:
            cells = [str(x) for x in mu]
            cells[best_pos] = f"{best[0][best_pos]}..{best[-1][best_pos]}"
            text = ",".join(cells)
        out.append((mu, text))
    return [t for _, t in out]


def expand_template(text: str) -> list[tuple[int, ...]]:
    cells = text.split(",")
    out = [()]
    for cell in cells:
        if ".." in cell:
            lo, hi = (int(v) for v in cell.split(".."))
            vals = range(lo, hi + 1)
        else:
            vals = [int(cell)]
        out = [(*mu, v) for mu in out for v in vals]
    return out


# ---------------------------------------------------------------------------
# the explicit description for p = 7

SCHUR7_TEMPLATES = (
    "4,3", "5,3,2", "5,4,2", "9,6,5,1", "9,7,5,1", "13,9,7,5", "14,9,7,5",
    "13,9,8,5", "14,9,8,5", "14,9..13,8,6", "15,13,8,6", "15,13,8..12,7",
    "14,13,9,6,5", "15,13,9,6,5", "16,13,12,7", "16,14,12,7", "15,14,9,6,5",
    "15,14,8..13,7,6", "16,15,12,7,6", "16,15,12,8,6", "16,15,12,8,7",
    "16,14,13,7,6,5", "16,15,13,7,6,5", "16,15,14,7,6,5", "16,15,14,8,6,5",
    "16,15,14,8,7,5",
)

SCHUR7_PATTERNS = tuple(mu for t in SCHUR7_TEMPLATES for mu in expand_template(t))

_SCHUR7_TRIPLES = {(1, 4, 2), (2, 1, 4), (3, 6, 5), (4, 2, 1), (5, 3, 6), (6, 5, 3)}


def in_schur7(parts: Parts) -> bool:
    """Explicit description of the image class for p = 7.

    Parts at distance 3 differ by at least 7, and by more than 7 when some
    initial or final run of the four parts sums to a multiple of 7 while the
    residues of the first three are not one of six exceptional triples. On
    top of that, 39 patterns and their 7-shifts are forbidden.
    """
    if not is_strict(parts):
        return False
    for i in range(len(parts) - 3):
        w = parts[i:i + 4]
        gap = w[0] - w[3]
        if gap < 7:
            return False
        if gap == 7:
            sums = any(sum(w[:j + 1]) % 7 == 0 or sum(w[3 - j:]) % 7 == 0 for j in range(3))
            triple = (w[0] % 7, w[1] % 7, w[2] % 7)
            if sums and triple not in _SCHUR7_TRIPLES:
                return False
    return avoids_shifted(parts, SCHUR7_PATTERNS, 7)


def schur7_class() -> PartitionClass:
    return PartitionClass("schur7", in_schur7)
