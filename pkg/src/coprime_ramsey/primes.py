"""Prime generation and indexing services.

Everything downstream indexes primes 1-based: p_1 = 2, p_2 = 3, ...
The table also carries a least-prime-factor array so that prime supports
of integers can be read off without trial division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


class SieveRangeError(Exception):
    """Raised when an operation needs primes beyond the sieved limit.

    Callers can recover by rebuilding with a larger limit; `table_for_index`
    does this automatically.
    """


@dataclass(frozen=True)
class PrimeTable:
    """Immutable sieve up to `limit`: prime list, lpf array, prefix counts."""

    limit: int
    primes: np.ndarray  # ascending, int64
    lpf: np.ndarray  # lpf[v] for 0 <= v <= limit; lpf[0] = lpf[1] = 0
    pi_cache: np.ndarray = field(repr=False)  # pi_cache[x] = pi(x)

    def pi(self, x: int) -> int:
        """Number of primes <= x."""
        if x < 0 or x > self.limit:
            raise SieveRangeError(f"pi({x}) outside sieved range [0, {self.limit}]")
        return int(self.pi_cache[x])

    def nth_prime(self, m: int) -> int:
        """The m-th prime, 1-based (p_1 = 2)."""
        if m < 1:
            raise ValueError(f"prime index must be >= 1, got {m}")
        if m > len(self.primes):
            raise SieveRangeError(
                f"p_{m} exceeds sieved range (limit {self.limit}, "
                f"{len(self.primes)} primes); re-sieve with a larger limit"
            )
        return int(self.primes[m - 1])

    def is_prime(self, v: int) -> bool:
        if v < 0 or v > self.limit:
            raise SieveRangeError(f"is_prime({v}) outside sieved range")
        return v >= 2 and int(self.lpf[v]) == v

    def prime_index(self, p: int) -> int:
        """1-based index of a prime p (inverse of nth_prime)."""
        if not self.is_prime(p):
            raise ValueError(f"{p} is not a listed prime")
        return self.pi(p)

    def support(self, v: int) -> tuple[int, ...]:
        """Distinct prime divisors of v, ascending.  support(1) = ()."""
        if v < 1 or v > self.limit:
            raise SieveRangeError(f"support({v}) outside sieved range")
        out = []
        while v > 1:
            p = int(self.lpf[v])
            out.append(p)
            while v % p == 0:
                v //= p
        return tuple(out)

    def support_mask(self, v: int) -> int:
        """Prime support as a bitset over 0-based prime ranks."""
        mask = 0
        for p in self.support(v):
            mask |= 1 << (self.pi(p) - 1)
        return mask


def build(limit: int) -> PrimeTable:
    """Sieve up to `limit`, computing lpf for all of 2..limit."""
    if limit < 2:
        raise ValueError(f"sieve limit must be >= 2, got {limit}")
    lpf = np.zeros(limit + 1, dtype=np.int64)
    for p in range(2, math.isqrt(limit) + 1):
        if lpf[p] == 0:
            sl = lpf[p::p]
            sl[sl == 0] = p
    # numbers still unmarked are primes > sqrt(limit)
    rest = np.nonzero(lpf[2:] == 0)[0] + 2
    lpf[rest] = rest
    idx = np.arange(limit + 1, dtype=np.int64)
    is_p = lpf == idx
    is_p[:2] = False
    primes = idx[is_p]
    pi_cache = np.cumsum(is_p, dtype=np.int64)
    return PrimeTable(limit=limit, primes=primes, lpf=lpf, pi_cache=pi_cache)


def _limit_for_index(m: int) -> int:
    # p_m < m(ln m + ln ln m) for m >= 6; add slack and a small floor
    if m < 6:
        return 16
    x = float(m)
    return int(x * (math.log(x) + math.log(math.log(x)))) + 64


def table_for_index(m: int, table: PrimeTable | None = None) -> PrimeTable:
    """Return a table containing p_m, re-sieving if `table` is too small."""
    if table is not None and m <= len(table.primes):
        return table
    t = build(_limit_for_index(m))
    while len(t.primes) < m:  # defensive: bound estimate failed
        t = build(t.limit * 2)
    return t


_default_table: PrimeTable = build(1 << 12)


def default_table(min_index: int = 0, min_limit: int = 2) -> PrimeTable:
    """Shared lazily-grown table.  Grown copies replace the module global."""
    global _default_table
    t = _default_table
    if len(t.primes) < min_index or t.limit < min_limit:
        t = table_for_index(max(min_index, 1), None)
        while t.limit < min_limit:
            t = build(max(min_limit, t.limit * 2))
        _default_table = t
    return t


def nth(m: int) -> int:
    """p_m from the shared table, growing it on demand."""
    return default_table(min_index=m).nth_prime(m)


def gap_scan(table: PrimeTable, m_max: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Minima of p_{2m} - 2 p_m and 3 p_m - p_{2m} over 2 <= m <= m_max.

    Returns ((min1, argmin1), (min2, argmin2)).  Both minima being >= 1
    verifies the strict double inequality 2 p_m < p_{2m} < 3 p_m on the
    scanned range.
    """
    if m_max < 2:
        raise ValueError("m_max must be >= 2")
    if 2 * m_max > len(table.primes):
        raise SieveRangeError(
            f"gap_scan needs p_{2 * m_max}; table has only {len(table.primes)} primes"
        )
    m = np.arange(2, m_max + 1)
    pm = table.primes[m - 1]
    p2m = table.primes[2 * m - 1]
    low = p2m - 2 * pm
    high = 3 * pm - p2m
    i1 = int(np.argmin(low))
    i2 = int(np.argmin(high))
    return (int(low[i1]), int(m[i1])), (int(high[i2]), int(m[i2]))
