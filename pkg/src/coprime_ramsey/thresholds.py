"""Exact threshold formulas and classical-Ramsey transfers.

The vertex-coloring threshold is p_M with M = sum(k_i - 1).  Edge-coloring
variants are classical Ramsey numbers viewed through the prime-index map
N -> p_{N-1}; the classical windows themselves are embedded data (from
Radziszowski's Small Ramsey Numbers survey), never recomputed, and unknown
demands raise instead of guessing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import primes as primes_mod
from .primes import PrimeTable


class UnknownClassicalValueError(KeyError):
    """No embedded classical Ramsey entry for the requested demands."""


@dataclass(frozen=True)
class Demands:
    """Mixed demand vector (k_1, ..., k_c)."""

    ks: tuple[int, ...]

    def __post_init__(self):
        if len(self.ks) < 1:
            raise ValueError("at least one color demand is required")
        for k in self.ks:
            if k < 2:
                raise ValueError(f"every demand must be >= 2, got {k}")

    @property
    def M(self) -> int:
        return sum(k - 1 for k in self.ks)

    @property
    def colors(self) -> int:
        return len(self.ks)

    def key(self) -> tuple[int, ...]:
        return tuple(sorted(self.ks))


def demands(*ks: int) -> Demands:
    return Demands(tuple(ks))


@dataclass(frozen=True)
class RamseyBound:
    lower: int
    upper: int

    def __post_init__(self):
        if self.lower > self.upper:
            raise ValueError("lower bound exceeds upper bound")

    @property
    def exact(self) -> bool:
        return self.lower == self.upper


# Two-color windows R(3,3)..R(7,10) plus the multicolor entries used by the
# transfer tables (R(3,3,3), R(2,3), R(2,4)).
_CLASSICAL_ROWS: dict[tuple[int, ...], tuple[int, int]] = {
    (2, 3): (3, 3),
    (2, 4): (4, 4),
    (3, 3): (6, 6),
    (3, 4): (9, 9),
    (3, 5): (14, 14),
    (3, 6): (18, 18),
    (3, 7): (23, 23),
    (3, 8): (28, 28),
    (3, 9): (36, 36),
    (3, 10): (40, 41),
    (4, 4): (18, 18),
    (4, 5): (25, 25),
    (4, 6): (36, 40),
    (4, 7): (49, 58),
    (4, 8): (59, 79),
    (4, 9): (73, 105),
    (4, 10): (92, 135),
    (5, 5): (43, 46),
    (5, 6): (59, 85),
    (5, 7): (80, 133),
    (5, 8): (101, 193),
    (5, 9): (133, 282),
    (5, 10): (149, 381),
    (6, 6): (102, 160),
    (6, 7): (115, 270),
    (6, 8): (134, 423),
    (6, 9): (183, 651),
    (6, 10): (204, 944),
    (7, 7): (205, 492),
    (7, 8): (219, 832),
    (7, 9): (252, 1368),
    (7, 10): (292, 2119),
    (3, 3, 3): (17, 17),
}

# Gallai: every 3-edge-coloring of K_N has a monochromatic or rainbow triangle.
GALLAI_TRIANGLE_3 = 11


@dataclass(frozen=True)
class ClassicalTable:
    entries: dict[tuple[int, ...], RamseyBound]

    def lookup(self, d: Demands) -> RamseyBound:
        try:
            return self.entries[d.key()]
        except KeyError:
            raise UnknownClassicalValueError(
                f"no classical Ramsey entry for demands {d.ks}"
            ) from None

    @staticmethod
    def embedded() -> "ClassicalTable":
        return ClassicalTable(
            {k: RamseyBound(lo, hi) for k, (lo, hi) in _CLASSICAL_ROWS.items()}
        )

    @staticmethod
    def from_json(path_or_text) -> "ClassicalTable":
        """Load rows of {"demands": [...], "lower": L, "upper": U}."""
        if hasattr(path_or_text, "read"):
            data = json.load(path_or_text)
        else:
            text = str(path_or_text)
            data = json.loads(text) if text.lstrip().startswith("[") else json.load(open(text))
        entries = {}
        for row in data:
            key = tuple(sorted(int(k) for k in row["demands"]))
            entries[key] = RamseyBound(int(row["lower"]), int(row["upper"]))
        return ClassicalTable(entries)


DEFAULT_CLASSICAL = ClassicalTable.embedded()

# t-uniform classical hypergraph Ramsey data.  The t=3 value R^(3)(4,4) = 13
# is well known but external to the transfer mechanism shipped here; it is
# kept in a separate optional table.
HYPERGRAPH_CLASSICAL_T3 = ClassicalTable({(4, 4): RamseyBound(13, 13)})


def r_cop(d: Demands) -> int:
    """Mixed vertex-coprime Ramsey number: p_M, M = sum(k_i - 1)."""
    return primes_mod.nth(d.M)


def r_cop_covering(d: Demands) -> int:
    """Covering variant; provably equal to r_cop, exposed for API symmetry."""
    return r_cop(d)


def r_cop_edge(d: Demands, table: ClassicalTable = DEFAULT_CLASSICAL) -> RamseyBound:
    """Edge-coloring threshold window: p_{N-1} applied to the classical window."""
    cl = table.lookup(d)
    return RamseyBound(primes_mod.nth(cl.lower - 1), primes_mod.nth(cl.upper - 1))


def transfer_bound_table(
    table: ClassicalTable = DEFAULT_CLASSICAL,
) -> list[tuple[tuple[int, ...], RamseyBound, RamseyBound]]:
    """(demands, classical window, transferred window) for every embedded entry."""
    rows = []
    for key in sorted(table.entries, key=lambda t: (len(t), t)):
        cl = table.entries[key]
        rows.append((key, cl, r_cop_edge(Demands(key), table)))
    return rows


def gcd_scaled_edge(
    d: Demands, divisor: int, table: ClassicalTable = DEFAULT_CLASSICAL
) -> RamseyBound:
    """Edge threshold on the gcd == divisor host: divisor * p_{R_cl - 1}."""
    if divisor < 1:
        raise ValueError("divisor must be >= 1")
    base = r_cop_edge(d, table)
    return RamseyBound(divisor * base.lower, divisor * base.upper)


def hypergraph_vertex(t: int, d: Demands) -> int:
    """t-uniform vertex-coloring analogue; same value as r_cop once k_i >= t."""
    if t < 2:
        raise ValueError("uniformity t must be >= 2")
    for k in d.ks:
        if k < t:
            raise ValueError(f"demand {k} below uniformity {t}")
    return r_cop(d)


def hypergraph_edge(
    t: int, d: Demands, classical_t_uniform: ClassicalTable | None = None
) -> RamseyBound:
    """t-uniform hyperedge-coloring analogue: p_{R_cl^(t) - 1}."""
    if t < 2:
        raise ValueError("uniformity t must be >= 2")
    for k in d.ks:
        if k < t:
            raise ValueError(f"demand {k} below uniformity {t}")
    if t == 2:
        return r_cop_edge(d, classical_t_uniform or DEFAULT_CLASSICAL)
    if classical_t_uniform is None:
        raise UnknownClassicalValueError(
            f"no {t}-uniform classical table supplied; pass one explicitly"
        )
    cl = classical_t_uniform.lookup(d)
    return RamseyBound(primes_mod.nth(cl.lower - 1), primes_mod.nth(cl.upper - 1))


def rank_trigger(
    d: Demands, mode: str, table: ClassicalTable = DEFAULT_CLASSICAL
) -> int:
    """Clique-label rank at which a host graph starts forcing.

    Vertex colorings trigger at 1 + sum(k_i - 1); edge colorings at the
    classical Ramsey number (exact entries only).
    """
    if mode == "vertex":
        return 1 + d.M
    if mode == "edge":
        cl = table.lookup(d)
        if not cl.exact:
            raise UnknownClassicalValueError(
                f"classical value for {d.ks} is a window, not an exact trigger"
            )
        return cl.lower
    raise ValueError(f"mode must be 'vertex' or 'edge', got {mode!r}")


def trigger_threshold(r: int) -> int:
    """Integer threshold p_{r-1} for a rank trigger r."""
    if r < 2:
        raise ValueError("rank trigger must be >= 2")
    return primes_mod.nth(r - 1)


def shifted_upper_bound(m: int, k: int, table: PrimeTable | None = None) -> int:
    """Pigeonhole bound for intervals {m+1..m+n}: least n with
    pi(m+n) - pi(m) >= 2k - 1."""
    if m < 0:
        raise ValueError("shift must be >= 0")
    if k < 2:
        raise ValueError("k must be >= 2")
    table = table or primes_mod.default_table(min_limit=max(m + 2, 2))
    if table.limit < m:
        raise primes_mod.SieveRangeError("table too small for the shift")
    target = table.pi(m) + 2 * k - 1
    p = primes_mod.nth(target) if target > len(table.primes) else table.nth_prime(target)
    return p - m
