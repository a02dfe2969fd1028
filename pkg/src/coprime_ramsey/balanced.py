"""Balanced coprime colorings: deterministic splits and flow certificates.

Two-color balance is handled by the skip-2 prime split, which is exactly
balanced at n = p_{2k-2} - 1 and extends to off-diagonal demands and to a
window of prescribed class sizes.  Multicolor balance at the endpoint
n = p_{c(k-1)} - 1 is decided by dealing primes round-robin into bins and
solving an exact transportation problem (max-flow form of Hall's theorem)
over the allowed-color sets.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import primes as primes_mod
from .certificates import BinPartition, ColoringWitness, build_prime_bin_coloring
from .primes import PrimeTable
from .thresholds import Demands, demands, r_cop


class WindowRangeError(ValueError):
    """Requested class size outside what this construction can realize.

    Not a claim that no such coloring exists at all.
    """


@dataclass(frozen=True)
class SplitSpec:
    """Geometry of a two-color prime split for demands (s, t)."""

    s: int
    t: int
    n: int
    bins: BinPartition  # bins[0] guards the s-demand color, bins[1] the t-demand

    @property
    def diagonal(self) -> bool:
        return self.s == self.t


@dataclass(frozen=True)
class ForcedSets:
    """Partition of the interval induced by the two bins.

    forced0 / forced1 collect vertices whose supports live entirely in one
    bin (vertex 1 counts as forced into the color that holds it); flexible
    vertices meet both bins and can go either way.
    """

    forced0: np.ndarray
    forced1: np.ndarray
    flexible: np.ndarray


@dataclass(frozen=True)
class FlowInstance:
    """Exact assignment problem: each vertex to one allowed color, sizes fixed."""

    length: int
    allowed: np.ndarray  # per-vertex bitmask, bit i-1 = color i permitted
    targets: tuple[int, ...]
    bins: BinPartition | None = None

    def __post_init__(self):
        if len(self.allowed) != self.length:
            raise ValueError("allowed-mask array length mismatch")
        if sum(self.targets) != self.length:
            raise ValueError("targets must sum to the vertex count")


@dataclass(frozen=True)
class AssignmentResult:
    feasible: bool
    witness: ColoringWitness | None = None
    blocking_set: tuple[int, ...] | None = None  # Hall-violating color subset
    sizes: tuple[int, ...] | None = None


def balanced_targets(n: int, c: int) -> tuple[int, ...]:
    """Ceilings first: the first n mod c colors get one extra vertex."""
    q, r = divmod(n, c)
    return tuple(q + 1 if i < r else q for i in range(c))


# ---------------------------------------------------------------------------
# two-color splits


class _SplitArrays:
    """Shared per-vertex factor data reused across many (s, t) pairs.

    For v in [2, limit]: index of the smallest odd prime factor (a big
    sentinel when v is a power of two), index of the greatest prime factor,
    and the factors themselves.
    """

    SENTINEL = 1 << 30

    def __init__(self, limit: int, table: PrimeTable | None = None):
        table = table or primes_mod.default_table(min_limit=max(limit, 4))
        self.table = table
        self.limit = limit
        v = np.arange(limit + 1, dtype=np.int64)
        odd = v.copy()
        while True:
            even = (odd % 2 == 0) & (odd > 0)
            if not np.any(even):
                break
            odd[even] //= 2
        self.spf_odd = table.lpf[odd].copy()  # 0 for powers of two (odd part 1)
        gpf = np.zeros(limit + 1, dtype=np.int64)
        for p in table.primes[table.primes <= limit]:
            gpf[p::p] = p  # ascending primes, so the last write wins
        self.gpf = gpf
        pi = table.pi_cache
        self.mi2 = np.where(self.spf_odd > 0, pi[self.spf_odd], self.SENTINEL)
        self.ma = np.where(gpf > 0, pi[gpf], 0)


_split_cache: dict[int, _SplitArrays] = {}


def _split_arrays(limit: int) -> _SplitArrays:
    for lim, arr in _split_cache.items():
        if lim >= limit:
            return arr
    arr = _SplitArrays(limit)
    _split_cache.clear()
    _split_cache[limit] = arr
    return arr


def offdiag_split(s: int, t: int) -> tuple[SplitSpec, ForcedSets, ColoringWitness]:
    """Exactly balanced two-color witness at n = p_{s+t-2} - 1.

    Vertex 1 sits in the larger-demand color A, whose bin holds the a-2 odd
    primes p_2..p_{a-1} (a = max(s,t)); the other bin holds 2 together with
    the top primes p_a..p_{s+t-3}.  The b-2 composites 2 p_2 .. 2 p_{b-1}
    are the flexible vertices pulled into color A to reach exact balance.
    """
    if s < 2 or t < 2:
        raise ValueError("demands must be >= 2")
    a, b = max(s, t), min(s, t)
    M = s + t - 2
    table = primes_mod.default_table(min_index=M)
    n = table.nth_prime(M) - 1
    arr = _split_arrays(max(n, 4))
    table = arr.table

    mi2 = arr.mi2[1 : n + 1]
    ma = arr.ma[1 : n + 1]
    v = np.arange(1, n + 1, dtype=np.int64)
    is_even = v % 2 == 0
    meets_a = mi2 <= a - 1
    meets_b = is_even | (ma >= a)
    forced_a = ~meets_b & meets_a
    forced_a[0] = True  # vertex 1
    forced_b = meets_b & ~meets_a
    flexible = meets_a & meets_b

    if a > 2:
        bin_a = tuple(int(p) for p in table.primes[1 : a - 1])
    else:
        bin_a = ()
    bin_b = (2,) + tuple(int(p) for p in table.primes[a - 1 : M - 1])
    # flexible pivots 2 p_2 .. 2 p_{b-1}; Lemma-scale gap check 2 p_{b-1} <= n
    pivots = 2 * table.primes[1 : b - 1]
    if len(pivots) and int(pivots[-1]) > n:
        raise AssertionError(f"flexible pivot {int(pivots[-1])} exceeds n = {n}")

    na = int(np.count_nonzero(forced_a))
    if na != n // 2 - (b - 2):
        raise AssertionError(f"forced-A size {na} != n/2 - (b-2) at ({s},{t})")

    color_a = np.zeros(n, dtype=bool)
    color_a |= forced_a
    color_a[pivots - 1] = True
    # witness primes: smallest odd factor inside A, else 2 / greatest factor
    spf_odd = arr.spf_odd[1 : n + 1]
    gpf = arr.gpf[1 : n + 1]
    wps = np.where(color_a, spf_odd, np.where(is_even, 2, gpf))
    wps[0] = 0

    # caller order: color 1 answers demand s, color 2 answers demand t
    a_is_first = s >= t
    colors = np.where(color_a, 1 if a_is_first else 2, 2 if a_is_first else 1)
    bins_ordered = (bin_a, bin_b) if a_is_first else (bin_b, bin_a)
    caps = (s - 2, t - 1) if a_is_first else (s - 1, t - 2)
    bins = BinPartition(bins=bins_ordered, capacities=caps, one_color=1 if a_is_first else 2)

    spec = SplitSpec(s=s, t=t, n=n, bins=bins)
    forced = ForcedSets(
        forced0=v[forced_a if a_is_first else forced_b],
        forced1=v[forced_b if a_is_first else forced_a],
        flexible=v[flexible],
    )
    witness = ColoringWitness(shift=0, length=n, colors=colors.astype(np.int64), witness_primes=wps)
    sizes = witness.color_sizes(2)
    if sizes[0] != sizes[1]:
        raise AssertionError(f"split not balanced at ({s},{t}): sizes {sizes}")
    return spec, forced, witness


def skip2_split(k: int) -> tuple[SplitSpec, ForcedSets, ColoringWitness]:
    """Diagonal skip-2 split: exactly balanced at n = p_{2k-2} - 1."""
    return offdiag_split(k, k)


def density_window(k: int, r: int) -> tuple[ColoringWitness, BinPartition]:
    """Witness with exactly r vertices in color 1, for |r - n/2| <= k - 2.

    Within the window the construction toggles flexible pivots; past balance
    it builds the mirror count and swaps color names.
    """
    if k < 3:
        raise ValueError("density window needs k >= 3")
    spec, forced, _ = skip2_split(k)
    n = spec.n
    half = n // 2
    if abs(r - half) > k - 2:
        raise WindowRangeError(f"target {r} outside [{half - (k - 2)}, {half + (k - 2)}]")
    flip = r > half
    if flip:
        r = n - r
    toggles = r - (half - (k - 2))  # how many pivots join color 1
    arr = _split_arrays(max(n, 4))
    table = arr.table
    pivots = (2 * table.primes[1 : k - 1])[:toggles]

    forced0 = np.zeros(n, dtype=bool)
    forced0[forced.forced0 - 1] = True
    color1 = forced0.copy()
    color1[pivots - 1] = True
    v = np.arange(1, n + 1, dtype=np.int64)
    is_even = v % 2 == 0
    wps = np.where(color1, arr.spf_odd[1 : n + 1], np.where(is_even, 2, arr.gpf[1 : n + 1]))
    wps[0] = 0
    colors = np.where(color1, 1, 2).astype(np.int64)
    bins = spec.bins
    if flip:
        colors = 3 - colors
        bins = BinPartition(
            bins=(bins.bins[1], bins.bins[0]),
            capacities=(bins.capacities[1], bins.capacities[0]),
            one_color=2,
        )
    witness = ColoringWitness(shift=0, length=n, colors=colors, witness_primes=wps)
    want = n - r if flip else r
    if witness.color_sizes(2)[0] != want:
        raise AssertionError("window construction missed its target size")
    return witness, bins


def window_rows(ks) -> list[tuple[int, int, int, int, int]]:
    """(k, n, |F_0|, theorem value n/2 - (k-2), window width 2k-3)."""
    rows = []
    for k in ks:
        spec, forced, _ = skip2_split(k)
        rows.append((k, spec.n, len(forced.forced0), spec.n // 2 - (k - 2), 2 * k - 3))
    return rows


def offdiag_rows(pairs) -> list[tuple[int, int, int, int, int, int, bool]]:
    """(s, t, n, |F_0|, |F_1|, flexible count, balanced?) per demand pair."""
    rows = []
    for s, t in pairs:
        spec, forced, w = offdiag_split(s, t)
        sizes = w.color_sizes(2)
        rows.append(
            (s, t, spec.n, len(forced.forced0), len(forced.forced1),
             len(forced.flexible), sizes[0] == sizes[1])
        )
    return rows


# ---------------------------------------------------------------------------
# multicolor: round-robin bins + exact flow


def roundrobin_bins(c: int, k: int, start: int = 0) -> BinPartition:
    """Deal p_1..p_{M-1} (M = c(k-1)) cyclically into c capacity-checked bins.

    Bin 1 holds vertex 1 and caps at k-2; the others cap at k-1.  A prime
    landing on a full bin moves to the next bin with room.
    """
    if c < 3 or k < 3:
        raise ValueError("round-robin bins need c >= 3 and k >= 3")
    M = c * (k - 1)
    table = primes_mod.default_table(min_index=M)
    caps = [k - 2] + [k - 1] * (c - 1)
    bins: list[list[int]] = [[] for _ in range(c)]
    turn = start % c
    for m in range(1, M):
        i = turn
        while len(bins[i]) >= caps[i]:
            i = (i + 1) % c
        bins[i].append(int(table.primes[m - 1]))
        turn = (turn + 1) % c
    return BinPartition(bins=tuple(tuple(b) for b in bins), capacities=tuple(caps), one_color=1)


def endpoint_instance(c: int, k: int, bins: BinPartition | None = None) -> FlowInstance:
    """Balanced assignment instance at the endpoint n = p_{c(k-1)} - 1."""
    bins = bins if bins is not None else roundrobin_bins(c, k)
    M = c * (k - 1)
    table = primes_mod.default_table(min_index=M)
    n = table.nth_prime(M) - 1
    allowed = np.zeros(n + 1, dtype=np.int64)
    for i, b in enumerate(bins.bins):
        for p in b:
            if p <= n:
                allowed[p::p] |= 1 << i
    allowed[1] = 1  # vertex 1 goes with bin 1
    return FlowInstance(
        length=n, allowed=allowed[1:], targets=balanced_targets(n, c), bins=bins
    )


def _max_flow(cap: np.ndarray, source: int, sink: int) -> np.ndarray:
    """Edmonds-Karp on a dense capacity matrix; returns the flow matrix."""
    nnode = cap.shape[0]
    flow = np.zeros_like(cap)
    while True:
        parent = [-1] * nnode
        parent[source] = source
        queue = [source]
        while queue and parent[sink] == -1:
            u = queue.pop(0)
            residual = cap[u] - flow[u] + flow[:, u]
            for w in np.nonzero(residual > 0)[0]:
                if parent[w] == -1:
                    parent[w] = u
                    queue.append(int(w))
        if parent[sink] == -1:
            return flow
        # bottleneck along the path
        path = []
        w = sink
        while w != source:
            path.append((parent[w], w))
            w = parent[w]
        aug = min(int(cap[u, w2] - flow[u, w2] + flow[w2, u]) for u, w2 in path)
        for u, w2 in path:
            fwd = min(aug, int(cap[u, w2] - flow[u, w2]))
            flow[u, w2] += fwd
            flow[w2, u] -= aug - fwd


def flow_assign(inst: FlowInstance) -> AssignmentResult:
    """Decide the exact balanced assignment; feasible iff max flow = n.

    Vertices are compressed by allowed-color mask before the flow, then the
    per-mask color quotas are handed back to concrete vertices in order.
    On infeasibility the residual cut yields a Hall-violating color set.
    """
    c = len(inst.targets)
    masks, inverse, counts = np.unique(inst.allowed, return_inverse=True, return_counts=True)
    if masks[0] == 0:
        return AssignmentResult(False, blocking_set=())
    m = len(masks)
    nnode = m + c + 2
    src, snk = 0, nnode - 1
    cap = np.zeros((nnode, nnode), dtype=np.int64)
    for j in range(m):
        cap[src, 1 + j] = counts[j]
        for i in range(c):
            if masks[j] >> i & 1:
                cap[1 + j, 1 + m + i] = counts[j]
    for i in range(c):
        cap[1 + m + i, snk] = inst.targets[i]
    flow = _max_flow(cap, src, snk)
    total = int(flow[src].sum())
    if total < inst.length:
        # colors reachable in the residual graph form the blocking set
        reach = {src}
        queue = [src]
        while queue:
            u = queue.pop()
            residual = cap[u] - flow[u] + flow[:, u]
            for w in np.nonzero(residual > 0)[0]:
                if int(w) not in reach:
                    reach.add(int(w))
                    queue.append(int(w))
        block = tuple(i + 1 for i in range(c) if 1 + m + i in reach)
        smask = sum(1 << (i - 1) for i in block)
        n_s = int(counts[(masks & ~smask) == 0].sum())
        if n_s <= sum(inst.targets[i - 1] for i in block):
            raise AssertionError("min cut did not yield a Hall violation")
        return AssignmentResult(False, blocking_set=block)

    colors = np.zeros(inst.length, dtype=np.int64)
    for j in range(m):
        idx = np.nonzero(inverse == j)[0]
        pos = 0
        for i in range(c):
            q = int(flow[1 + j, 1 + m + i])
            colors[idx[pos : pos + q]] = i + 1
            pos += q
    witness = None
    if inst.bins is not None:
        wps = np.zeros(inst.length, dtype=np.int64)
        v = np.arange(1, inst.length + 1, dtype=np.int64)
        for i, b in enumerate(inst.bins.bins, start=1):
            sel = colors == i
            for p in b:
                need = sel & (wps == 0) & (v % p == 0)
                wps[need] = p
        witness = ColoringWitness(
            shift=0, length=inst.length, colors=colors, witness_primes=wps
        )
    sizes = tuple(int(np.count_nonzero(colors == i + 1)) for i in range(c))
    if sizes != inst.targets:
        raise AssertionError("flow decomposition missed the class-size targets")
    return AssignmentResult(True, witness=witness, sizes=sizes)


@dataclass(frozen=True)
class PhaseRow:
    k: int
    n: int
    feasible: bool
    blocking_set: tuple[int, ...] | None


@dataclass(frozen=True)
class PhaseSummary:
    c: int
    rows: tuple[PhaseRow, ...]
    last_failure: int | None
    all_success_from: int | None


def phase_scan(c: int, ks, start: int = 0) -> PhaseSummary:
    """Run the round-robin + flow certificate at each endpoint in ks."""
    from .certificates import verify_divisor_certificate

    rows = []
    for k in ks:
        bins = roundrobin_bins(c, k, start=start)
        inst = endpoint_instance(c, k, bins)
        res = flow_assign(inst)
        ok = res.feasible
        if ok and res.witness is not None:
            ok = bool(verify_divisor_certificate(res.witness, bins, demands(*([k] * c))))
        rows.append(PhaseRow(k=k, n=inst.length, feasible=ok, blocking_set=res.blocking_set))
    failures = [r.k for r in rows if not r.feasible]
    last_failure = max(failures) if failures else None
    onset = None
    if rows:
        onset = (last_failure + 1) if failures else min(r.k for r in rows)
        if not any(r.k >= onset and r.feasible for r in rows):
            onset = None
    return PhaseSummary(c=c, rows=tuple(rows), last_failure=last_failure, all_success_from=onset)


def imbalance_table(ks) -> list[tuple[int, int, int, int, int, float]]:
    """(k, n, majority, minority, imbalance, minority fraction) for the
    canonical prime-bin witness at n = r_cop(k,k) - 1."""
    rows = []
    for k in ks:
        n = r_cop(demands(k, k)) - 1
        w, _ = build_prime_bin_coloring(n, demands(k, k))
        s1, s2 = w.color_sizes(2)
        hi, lo = max(s1, s2), min(s1, s2)
        rows.append((k, n, hi, lo, hi - lo, round(lo / n, 3)))
    return rows
