"""Prime-bin certificates: build, verify, refute, and independently re-check.

A divisor-certified coloring proves the absence of monochromatic coprime
cliques with no clique search: every non-one vertex carries a witness prime
that divides it and lies in its color's bin, and bin capacities cap the
possible clique sizes.  `nu_packing` is the independent exact oracle used to
double-check every certificate.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from . import primes as primes_mod
from .thresholds import Demands


@dataclass(frozen=True)
class BinPartition:
    """Disjoint prime bins B_1..B_c with per-color capacities."""

    bins: tuple[tuple[int, ...], ...]
    capacities: tuple[int, ...]
    one_color: int | None  # 1-based color holding vertex 1, if any

    @property
    def colors(self) -> int:
        return len(self.bins)

    def color_of_prime(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for i, b in enumerate(self.bins, start=1):
            for p in b:
                out[p] = i
        return out


@dataclass
class ColoringWitness:
    """A c-coloring of an interval together with per-vertex witness primes.

    witness_primes[v] = 0 marks the absent witness of vertex 1.
    """

    shift: int
    length: int
    colors: np.ndarray
    witness_primes: np.ndarray

    def color_sizes(self, c: int) -> list[int]:
        return [int(np.count_nonzero(self.colors == i)) for i in range(1, c + 1)]

    def color_class(self, i: int) -> list[int]:
        v = np.arange(self.shift + 1, self.shift + self.length + 1)
        return [int(x) for x in v[self.colors == i]]

    def to_json(self) -> str:
        return json.dumps(
            {
                "shift": self.shift,
                "length": self.length,
                "colors": [int(x) for x in self.colors],
                "witness_primes": [int(x) for x in self.witness_primes],
            }
        )

    @staticmethod
    def from_json(text: str) -> "ColoringWitness":
        d = json.loads(text)
        return ColoringWitness(
            shift=int(d["shift"]),
            length=int(d["length"]),
            colors=np.asarray(d["colors"], dtype=np.int64),
            witness_primes=np.asarray(d["witness_primes"], dtype=np.int64),
        )


@dataclass(frozen=True)
class ForcingClique:
    """A monochromatic coprime clique extracted by pigeonhole."""

    color: int
    vertices: tuple[int, ...]
    demand: int


@dataclass(frozen=True)
class Verdict:
    accepted: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.accepted


def canonical_bins(n: int, d: Demands) -> BinPartition:
    """Fill bins with ascending primes <= n: color 1 up to k_1 - 2, then 2..c."""
    table = primes_mod.default_table(min_limit=max(n, 2))
    ps = [int(p) for p in table.primes[table.primes <= n]]
    caps = [d.ks[0] - 2] + [k - 1 for k in d.ks[1:]]
    bins: list[tuple[int, ...]] = []
    pos = 0
    for cap in caps:
        take = min(cap, len(ps) - pos)
        bins.append(tuple(ps[pos : pos + take]))
        pos += take
    if pos < len(ps):
        raise ValueError(f"capacities {caps} cannot hold the {len(ps)} primes <= {n}")
    return BinPartition(bins=tuple(bins), capacities=tuple(caps), one_color=1)


def build_prime_bin_coloring(n: int, d: Demands) -> tuple[ColoringWitness, BinPartition]:
    """The canonical avoiding witness of the exact formula's lower bound.

    Only exists below the threshold p_M; each vertex v > 1 is colored by the
    bin holding its least prime factor, which doubles as the witness prime.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    p_M = primes_mod.nth(d.M)
    if n >= p_M:
        raise ValueError(f"no avoiding coloring exists at n = {n} >= p_M = {p_M}")
    bins = canonical_bins(n, d)
    where = bins.color_of_prime()
    table = primes_mod.default_table(min_limit=max(n, 2))
    colors = np.empty(n, dtype=np.int64)
    wps = np.zeros(n, dtype=np.int64)
    colors[0] = 1
    for v in range(2, n + 1):
        q = int(table.lpf[v])
        colors[v - 1] = where[q]
        wps[v - 1] = q
    return ColoringWitness(shift=0, length=n, colors=colors, witness_primes=wps), bins


def verify_divisor_certificate(
    w: ColoringWitness, bins: BinPartition, d: Demands
) -> Verdict:
    """Accept iff the witness proves no monochromatic coprime K_{k_i}.

    Checks: capacities, bin disjointness, vertex-1 placement, and for every
    non-one vertex a witness prime dividing it inside its color's bin.
    """
    c = d.colors
    if bins.colors != c:
        return Verdict(False, "bin count does not match demand count")
    seen: set[int] = set()
    for i, b in enumerate(bins.bins, start=1):
        if len(b) > bins.capacities[i - 1]:
            return Verdict(False, f"bin {i} exceeds capacity {bins.capacities[i - 1]}")
        if seen & set(b):
            return Verdict(False, f"bin {i} overlaps an earlier bin")
        seen |= set(b)
    for i in range(c):
        cap = d.ks[i] - 2 if bins.one_color == i + 1 else d.ks[i] - 1
        if bins.capacities[i] > cap:
            return Verdict(False, f"capacity of bin {i + 1} exceeds {cap}")
    if w.length != len(w.colors) or w.length != len(w.witness_primes):
        return Verdict(False, "array lengths disagree with interval length")
    if np.any((w.colors < 1) | (w.colors > c)):
        return Verdict(False, "color index out of range")
    verts = np.arange(w.shift + 1, w.shift + w.length + 1, dtype=np.int64)
    has_one = w.shift == 0
    if has_one:
        if bins.one_color is None:
            return Verdict(False, "vertex 1 present but no designated one-color")
        if int(w.colors[0]) != bins.one_color:
            return Verdict(False, "vertex 1 not in the designated color")
        if int(w.witness_primes[0]) != 0:
            return Verdict(False, "vertex 1 must not carry a witness prime")
    start = 1 if has_one else 0
    v = verts[start:]
    wp = w.witness_primes[start:]
    col = w.colors[start:]
    if np.any(wp <= 1):
        return Verdict(False, "missing witness prime on a non-one vertex")
    if np.any(v % wp != 0):
        bad = int(v[np.nonzero(v % wp != 0)[0][0]])
        return Verdict(False, f"witness prime does not divide vertex {bad}")
    for i in range(1, c + 1):
        sel = col == i
        if not np.any(sel):
            continue
        binset = np.asarray(bins.bins[i - 1], dtype=np.int64)
        ok = np.isin(wp[sel], binset)
        if not np.all(ok):
            bad = int(v[sel][np.nonzero(~ok)[0][0]])
            return Verdict(False, f"witness prime not in bin for vertex {bad}")
    return Verdict(True, None)


def certificate_to_json(w: ColoringWitness, bins: BinPartition | None, d: Demands) -> str:
    """Self-contained certificate document: witness + bins + demands."""
    doc = {"demands": list(d.ks), "witness": json.loads(w.to_json())}
    if bins is not None:
        doc["bins"] = [list(b) for b in bins.bins]
        doc["capacities"] = list(bins.capacities)
        doc["one_color"] = bins.one_color
    return json.dumps(doc)


def certificate_from_json(doc) -> tuple[ColoringWitness, BinPartition | None, Demands]:
    if isinstance(doc, str):
        doc = json.loads(doc)
    d = Demands(tuple(int(k) for k in doc["demands"]))
    w = ColoringWitness.from_json(json.dumps(doc["witness"]))
    bins = None
    if "bins" in doc:
        bins = BinPartition(
            bins=tuple(tuple(int(p) for p in b) for b in doc["bins"]),
            capacities=tuple(int(x) for x in doc["capacities"]),
            one_color=doc.get("one_color"),
        )
    return w, bins, d


def pigeonhole_refute(colors, d: Demands, shift: int = 0) -> ForcingClique | None:
    """Find a monochromatic coprime K_{k_i} inside the prime clique.

    `colors` is a 1-based-color assignment of the interval (index 0 is the
    first vertex).  Works on the standard graph (shift 0), where the prime
    clique is {1} union {primes <= n}.  Returns None if no color holds
    enough clique vertices, which can only happen when pi(n) + 1 <= M.
    """
    if shift != 0:
        raise ValueError("pigeonhole refutation uses the standard prime clique")
    colors = np.asarray(colors, dtype=np.int64)
    n = len(colors)
    table = primes_mod.default_table(min_limit=max(n, 2))
    clique = [1] + [int(p) for p in table.primes[table.primes <= n]]
    for i, k in enumerate(d.ks, start=1):
        members = [v for v in clique if int(colors[v - 1]) == i]
        if len(members) >= k:
            return ForcingClique(color=i, vertices=tuple(members[:k]), demand=k)
    return None


def nu_packing(vertex_set) -> int:
    """Exact pairwise-coprime packing number of a finite set of integers.

    Backtracking over elements sorted by support size, with a used-prime
    bitset; vertex 1 (coprime to everything) contributes +1 unconditionally.
    Elements with identical squarefree kernels are interchangeable, so only
    one representative per support is branched on.
    """
    elems = sorted(set(int(v) for v in vertex_set))
    if any(v < 1 for v in elems):
        raise ValueError("vertices must be positive integers")
    bonus = 1 if elems and elems[0] == 1 else 0
    elems = [v for v in elems if v > 1]
    if not elems:
        return bonus
    table = primes_mod.default_table(min_limit=max(elems))
    masks = sorted({table.support_mask(v) for v in elems}, key=lambda m: m.bit_count())
    best = 0

    def rec(i: int, used: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + (len(masks) - i) <= best:
            return
        for j in range(i, len(masks)):
            if size + (len(masks) - j) <= best:
                return
            if masks[j] & used == 0:
                rec(j + 1, used | masks[j], size + 1)

    rec(0, 0, 0)
    return best + bonus
