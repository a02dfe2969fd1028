"""Exhaustive oracles for small instances.

Everything here is independent of the closed-form thresholds: colorings are
searched directly over precomputed forbidden-clique lists, so these routines
double as cross-checks for the formulas and for the balanced constructions.

Verdicts are tri-state (avoidable / unavoidable / unknown); a search that
exhausts its node budget reports unknown, never a guess.  The only symmetry
reduction used is fixing the first vertex's color when all demands are
equal.  Normalizing prime vertices into a fixed color order is NOT sound
(two prime vertices can be forced apart by a third constraint even in a
two-color instance) and is deliberately absent; a regression test keeps an
instance that such a normalization would misclassify.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import primes as primes_mod
from .graph import enumerate_coprime_cliques, interval_graph
from .thresholds import Demands, demands

AVOIDABLE = "avoidable"
UNAVOIDABLE = "unavoidable"
UNKNOWN = "unknown"

DEFAULT_BUDGET = 2_000_000


class _BudgetExceeded(Exception):
    pass


@dataclass(frozen=True)
class SearchProblem:
    """A coloring instance over an integer interval with forbidden cliques.

    balance: None (free), "near" (all class sizes within one of each other),
    or an exact tuple of class sizes summing to the interval length.
    """

    shift: int
    length: int
    demands: Demands
    balance: object
    cliques: tuple[tuple[tuple[int, ...], ...], ...]  # per color, 0-based vertices

    @property
    def clique_count(self) -> int:
        seen = set()
        for cl in self.cliques:
            seen.update(cl)
        return len(seen)


def build_problem(length: int, d: Demands, shift: int = 0, balance=None) -> SearchProblem:
    if balance is not None and balance != "near":
        if len(balance) != d.colors or sum(balance) != length:
            raise ValueError("exact balance targets must be per-color and sum to n")
    g = interval_graph(length, shift=shift)
    by_size: dict[int, tuple[tuple[int, ...], ...]] = {}
    for k in set(d.ks):
        found: list[tuple[int, ...]] = []
        if k <= length:
            enumerate_coprime_cliques(
                g, k, visitor=lambda q: found.append(tuple(v - shift - 1 for v in q))
            )
        by_size[k] = tuple(found)
    return SearchProblem(
        shift=shift,
        length=length,
        demands=d,
        balance=balance,
        cliques=tuple(by_size[k] for k in d.ks),
    )


@dataclass(frozen=True)
class SearchResult:
    status: str  # avoidable | unavoidable | unknown
    colors: np.ndarray | None  # 1-based coloring when avoidable
    nodes: int

    def __bool__(self) -> bool:
        return self.status == AVOIDABLE


def _balance_bounds(p: SearchProblem) -> tuple[list[int], list[int]]:
    n, c = p.length, p.demands.colors
    if p.balance is None:
        return [0] * c, [n] * c
    if p.balance == "near":
        return [n // c] * c, [-(-n // c)] * c
    targets = tuple(p.balance)
    if sum(targets) != n:
        raise ValueError("exact balance targets must sum to the interval length")
    return list(targets), list(targets)


def avoidable(p: SearchProblem, budget: int = DEFAULT_BUDGET) -> SearchResult:
    """Backtracking with clique-constraint propagation and class-size bounds."""
    n, c = p.length, p.demands.colors
    ks = p.demands.ks
    lower, upper = _balance_bounds(p)

    # per color: clique member lists, and per vertex the clique ids it joins
    member: list[list[tuple[int, ...]]] = [list(cl) for cl in p.cliques]
    vert_cliques: list[list[list[int]]] = [
        [[] for _ in range(n)] for _ in range(c)
    ]
    for i in range(c):
        for qid, q in enumerate(member[i]):
            for v in q:
                vert_cliques[i][v].append(qid)

    full = (1 << c) - 1
    dom = [full] * n
    color = [0] * n
    counts = [0] * c
    same = [np.zeros(len(member[i]), dtype=np.int64) for i in range(c)]
    unfilled = [np.full(len(member[i]), ks[i], dtype=np.int64) for i in range(c)]
    weight = [sum(len(vert_cliques[i][v]) for i in range(c)) for v in range(n)]
    order_hint = sorted(range(n), key=lambda v: -weight[v])
    nodes = 0
    trail: list[tuple] = []

    def set_dom(v: int, new: int) -> None:
        trail.append(("dom", v, dom[v]))
        dom[v] = new

    def assign(v: int, i: int, queue: list) -> bool:
        """Returns False on conflict.  Propagated forcings go to `queue`."""
        trail.append(("color", v, 0))
        color[v] = i + 1
        counts[i] += 1
        trail.append(("count", i, 0))
        if counts[i] > upper[i]:
            return False
        unassigned = n - sum(counts)
        if sum(u - counts[j] for j, u in enumerate(upper)) < unassigned:
            return False
        for j in range(c):
            if counts[j] + unassigned < lower[j]:
                return False
        for qid in vert_cliques[i][v]:
            same[i][qid] += 1
            trail.append(("same", i, qid))
            if same[i][qid] == ks[i]:
                return False
        for j in range(c):
            for qid in vert_cliques[j][v]:
                unfilled[j][qid] -= 1
                trail.append(("unfilled", j, qid))
        # unit propagation: clique one short of demand with members still open
        for qid in vert_cliques[i][v]:
            if same[i][qid] == ks[i] - 1:
                for u in member[i][qid]:
                    if color[u] == 0 and dom[u] >> i & 1:
                        nd = dom[u] & ~(1 << i)
                        if nd == 0:
                            return False
                        set_dom(u, nd)
                        if nd & (nd - 1) == 0:
                            queue.append((u, nd.bit_length() - 1))
        return True

    def undo(mark: int) -> None:
        while len(trail) > mark:
            kind, a, b = trail.pop()
            if kind == "dom":
                dom[a] = b
            elif kind == "color":
                counts[color[a] - 1] -= 1
                color[a] = 0
            elif kind == "same":
                same[a][b] -= 1
            elif kind == "unfilled":
                unfilled[a][b] += 1
            # "count" entries only mark balance bookkeeping; nothing to undo

    def assign_all(v: int, i: int) -> bool:
        queue: list[tuple[int, int]] = [(v, i)]
        while queue:
            u, j = queue.pop()
            if color[u]:
                if color[u] != j + 1:
                    return False
                continue
            if not dom[u] >> j & 1:
                return False
            if not assign(u, j, queue):
                return False
        return True

    def pick() -> int:
        best, best_key = -1, None
        for v in order_hint:
            if color[v] == 0:
                d_ = dom[v]
                bits = d_.bit_count()
                if bits <= 1:
                    return v
                key = (bits, -weight[v])
                if best_key is None or key < best_key:
                    best, best_key = v, key
        return best

    def dfs() -> bool:
        nonlocal nodes
        if sum(counts) == n:
            return True
        nodes += 1
        if nodes > budget:
            raise _BudgetExceeded
        v = pick()
        d_ = dom[v]
        for i in range(c):
            if d_ >> i & 1:
                mark = len(trail)
                if assign_all(v, i) and dfs():
                    return True
                undo(mark)
        return False

    # color-swap symmetry exists only when demands AND size bounds are uniform
    symmetric = (
        all(k == ks[0] for k in ks)
        and all(x == lower[0] for x in lower)
        and all(x == upper[0] for x in upper)
    )
    if symmetric and n > 0 and upper[0] > 0:
        if not assign_all(0, 0):  # fix the first vertex's color (diagonal only)
            return SearchResult(UNAVOIDABLE, None, nodes)
    try:
        ok = dfs()
    except _BudgetExceeded:
        return SearchResult(UNKNOWN, None, nodes)
    if not ok:
        return SearchResult(UNAVOIDABLE, None, nodes)
    out = np.asarray(color, dtype=np.int64)
    _recheck(p, out)
    return SearchResult(AVOIDABLE, out, nodes)


def _recheck(p: SearchProblem, colors: np.ndarray) -> None:
    """Independent pass over the clique lists; a failed witness is a bug."""
    lower, upper = _balance_bounds(p)
    for i, cl in enumerate(p.cliques, start=1):
        cnt = int(np.count_nonzero(colors == i))
        if not (lower[i - 1] <= cnt <= upper[i - 1]):
            raise AssertionError("witness violates the class-size bounds")
        for q in cl:
            if all(colors[v] == i for v in q):
                raise AssertionError(f"witness contains a forbidden clique {q}")


@dataclass(frozen=True)
class ThresholdResult:
    status: str  # exact | unknown
    value: int | None
    witness: np.ndarray | None  # avoiding coloring at value - 1
    scanned_to: int


def threshold(
    shift: int, d: Demands, balance=None, budget: int = DEFAULT_BUDGET, n_max: int = 10_000
) -> ThresholdResult:
    """Least interval length with no avoiding coloring, by direct scan."""
    last_witness = None
    n = 1
    while n <= n_max:
        res = avoidable(build_problem(n, d, shift=shift, balance=balance), budget=budget)
        if res.status == UNKNOWN:
            return ThresholdResult(UNKNOWN, None, last_witness, scanned_to=n)
        if res.status == UNAVOIDABLE:
            return ThresholdResult("exact", n, last_witness, scanned_to=n)
        last_witness = res.colors
        n += 1
    return ThresholdResult(UNKNOWN, None, last_witness, scanned_to=n_max)


@dataclass(frozen=True)
class EndpointDecision:
    status: str  # feasible | infeasible | unknown
    clique_count: int
    colors: np.ndarray | None


def balanced_endpoint_decide(c: int, k: int, budget: int = DEFAULT_BUDGET) -> EndpointDecision:
    """Exhaustive near-balance verdict at the endpoint n = p_{c(k-1)} - 1."""
    if c < 2 or k < 2:
        raise ValueError("need c >= 2 and k >= 2")
    n = primes_mod.nth(c * (k - 1)) - 1
    p = build_problem(n, demands(*([k] * c)), balance="near")
    res = avoidable(p, budget=budget)
    status = {AVOIDABLE: "feasible", UNAVOIDABLE: "infeasible", UNKNOWN: UNKNOWN}[res.status]
    return EndpointDecision(status=status, clique_count=p.clique_count, colors=res.colors)


def interval_cert_exists(m: int, k: int, n: int) -> bool:
    """Naive prime-bin adaptation on {m+1..m+n}: needs an in-interval witness
    prime for every vertex and at most 2k-2 interval primes (2k-3 when the
    universal vertex 1 is present)."""
    if n < 1 or k < 2 or m < 0:
        raise ValueError("need m >= 0, k >= 2, n >= 1")
    table = primes_mod.default_table(min_limit=max(m + n, 4))
    cnt = table.pi(m + n) - table.pi(m)
    cap = 2 * k - 3 if m == 0 else 2 * k - 2
    if cnt > cap:
        return False
    for v in range(m + 1, m + n + 1):
        if v == 1:
            continue
        if not any(m < q <= m + n for q in table.support(v)):
            return False
    return True


def shifted_lower_cert_scan(shifts, ks) -> dict[tuple[int, int], bool]:
    """Whether the naive interval certificate exists at ANY length below the
    pigeonhole bound, per (shift, k) cell."""
    from .thresholds import shifted_upper_bound

    out: dict[tuple[int, int], bool] = {}
    for m in shifts:
        for k in ks:
            bound = shifted_upper_bound(m, k)
            out[(m, k)] = any(interval_cert_exists(m, k, n) for n in range(2, bound))
    return out
