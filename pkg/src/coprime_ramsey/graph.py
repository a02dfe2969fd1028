"""Coprime host graphs on integer intervals.

The standard graph lives on {1..n}; shifted variants on {m+1..m+n}.
Adjacency is gcd == 1, which for these vertex sets is exactly disjointness
of prime-divisor supports.  Supports are stored as bitsets over 1-based
prime ranks so clique extension tests are single AND operations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

import numpy as np

from . import primes as primes_mod
from .primes import PrimeTable

_COUNT_CAP = (1 << 63) - 1


class CountOverflowError(Exception):
    pass


@dataclass(frozen=True)
class IntervalGraph:
    """Coprime graph on the interval {shift+1, ..., shift+length}."""

    shift: int
    length: int
    table: PrimeTable
    support_masks: tuple[int, ...] = field(repr=False)  # per vertex, ascending

    @property
    def vertices(self) -> range:
        return range(self.shift + 1, self.shift + self.length + 1)

    def mask(self, v: int) -> int:
        self._check_vertex(v)
        return self.support_masks[v - self.shift - 1]

    def _check_vertex(self, v: int) -> None:
        if not (self.shift + 1 <= v <= self.shift + self.length):
            raise ValueError(
                f"vertex {v} outside interval [{self.shift + 1}, {self.shift + self.length}]"
            )


def interval_graph(length: int, shift: int = 0, table: PrimeTable | None = None) -> IntervalGraph:
    if length < 1:
        raise ValueError("interval length must be >= 1")
    if shift < 0:
        raise ValueError("shift must be >= 0")
    hi = shift + length
    table = primes_mod.default_table(min_limit=max(hi, 2)) if table is None else table
    if table.limit < hi:
        raise primes_mod.SieveRangeError(f"table limit {table.limit} < {hi}")
    masks = tuple(table.support_mask(v) for v in range(shift + 1, hi + 1))
    return IntervalGraph(shift=shift, length=length, table=table, support_masks=masks)


def adjacency(g: IntervalGraph, a: int, b: int) -> bool:
    """True iff a and b are coprime (equivalently: disjoint prime supports)."""
    g._check_vertex(a)
    g._check_vertex(b)
    if a == b:
        raise ValueError("adjacency is defined for distinct vertices")
    return math.gcd(a, b) == 1


def clique_number(g: IntervalGraph) -> tuple[int, list[int]]:
    """Clique number pi(n) + 1 of the standard graph, with the prime-clique witness."""
    if g.shift != 0:
        raise ValueError("clique_number formula requires shift 0")
    n = g.length
    witness = [1] + [int(p) for p in g.table.primes[g.table.primes <= n]]
    return len(witness), witness


def enumerate_coprime_cliques(
    g: IntervalGraph,
    k: int,
    visitor: Callable[[tuple[int, ...]], None] | None = None,
) -> int:
    """Count (and optionally visit) k-vertex pairwise-coprime subsets.

    Backtracking in ascending vertex order; a partial clique carries the
    union of used prime ranks as a bitset, and a candidate extends iff its
    support misses that bitset.  Vertex 1 has an empty support and is
    therefore always compatible.  The visitor receives each clique once, in
    lexicographic vertex order.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    n = g.length
    if k > n:
        return 0
    masks = g.support_masks
    if visitor is not None:
        count = 0
        clique: list[int] = []
        base = g.shift + 1

        def rec(start: int, used: int, depth: int) -> None:
            nonlocal count
            budget = n - (k - depth) + 1
            for j in range(start, budget):
                mj = masks[j]
                if mj & used:
                    continue
                clique.append(base + j)
                if depth + 1 == k:
                    count += 1
                    visitor(tuple(clique))
                else:
                    rec(j + 1, used | mj, depth + 1)
                clique.pop()

        rec(0, 0, 0)
        return count

    # counting path: per-vertex compatibility bitmasks over later vertices,
    # with a popcount shortcut at the last level
    compat = []
    for j in range(n):
        mj = masks[j]
        cm = 0
        for l in range(j + 1, n):
            if masks[l] & mj == 0:
                cm |= 1 << l
        compat.append(cm)
    count = 0

    def recc(cand: int, depth: int) -> None:
        nonlocal count
        if depth == k - 1:
            count += cand.bit_count()
            return
        c = cand
        while c:
            low = c & -c
            j = low.bit_length() - 1
            c ^= low
            recc(cand & compat[j] & ~(low - 1) & ~low, depth + 1)

    full = (1 << n) - 1
    recc(full, 0)
    if count > _COUNT_CAP:
        raise CountOverflowError("clique count exceeds 63-bit range")
    return count


def coprime_edge_count(n: int) -> int:
    """Number of unordered coprime pairs in {1..n}, by Mobius inversion.

    Kept as an independent cross-check for label_collision_scan.
    """
    table = primes_mod.default_table(min_limit=max(n, 2))
    mu = np.ones(n + 1, dtype=np.int64)
    mu[0] = 0
    for p in table.primes[table.primes <= n]:
        mu[p::p] *= -1
        p2 = int(p) * int(p)
        if p2 <= n:
            mu[p2::p2] = 0
    d = np.arange(1, n + 1, dtype=np.int64)
    cnt = n // d
    total = int(np.sum(mu[1:] * cnt * (cnt - 1) // 2))
    return total


def label_collision_scan(g: IntervalGraph, block: int = 512) -> tuple[int, int]:
    """Count coprime edges and coprime edges whose endpoints share a label.

    Labels are least prime factors; vertex 1 carries a distinguished label.
    Returns (coprime edge count, collision count); the collision count is the
    diagnostic that the label map is injective on every coprime clique.
    """
    if g.shift != 0:
        raise ValueError("label scan is defined on the standard graph")
    n = g.length
    v = np.arange(1, n + 1, dtype=np.int64)
    lab = g.table.lpf[1 : n + 1].copy()
    lab[0] = 0  # distinguished label for vertex 1
    edges = 0
    collisions = 0
    for lo in range(0, n, block):
        rows = v[lo : lo + block]
        gg = np.gcd.outer(rows, v)
        cop = gg == 1
        # keep strictly upper-triangular pairs
        col_idx = np.arange(1, n + 1)
        upper = col_idx[None, :] > rows[:, None]
        cop &= upper
        edges += int(np.count_nonzero(cop))
        same = lab[rows - 1][:, None] == lab[None, :]
        collisions += int(np.count_nonzero(cop & same))
    return edges, collisions
