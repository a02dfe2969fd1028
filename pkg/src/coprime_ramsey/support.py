"""Recognition primitive for support-disjointness hosts.

Given a graph with explicit edges and per-vertex atom supports, the
primitive checks whether supports fully explain the adjacency (singleton
coverage, at most one universal vertex, adjacency iff disjoint supports).
When they do, the Ramsey question collapses to a rank comparison and the
primitive emits either the forcing clique or the atom-bin avoiding coloring.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import primes as primes_mod
from .thresholds import Demands


@dataclass(frozen=True)
class SupportGraph:
    """Vertices with atom-subset supports plus an independent edge list.

    Adjacency is stored explicitly (never derived from supports) so the
    adjacency-vs-disjointness condition is a genuine check.
    """

    atom_count: int
    vertex_ids: tuple[int, ...]
    supports: tuple[int, ...]  # bitsets over atoms 0..atom_count-1
    edges: frozenset[frozenset] = field(repr=False)
    atom_labels: tuple[int, ...] | None = None  # display names (e.g. primes)

    def label(self, atom: int):
        return self.atom_labels[atom] if self.atom_labels else atom

    def __post_init__(self):
        if self.atom_count < 1:
            raise ValueError("need at least one atom")
        if len(self.vertex_ids) != len(self.supports):
            raise ValueError("vertex/support length mismatch")

    @staticmethod
    def from_json(text: str) -> "SupportGraph":
        d = json.loads(text)
        ids = []
        sups = []
        for v in d["vertices"]:
            ids.append(int(v["id"]))
            mask = 0
            for a in v["support"]:
                mask |= 1 << int(a)
            sups.append(mask)
        edges = frozenset(frozenset((int(u), int(v))) for u, v in d["edges"])
        return SupportGraph(
            atom_count=int(d["atoms"]),
            vertex_ids=tuple(ids),
            supports=tuple(sups),
            edges=edges,
        )

    def to_json(self) -> str:
        verts = [
            {"id": vid, "support": [a for a in range(self.atom_count) if s >> a & 1]}
            for vid, s in zip(self.vertex_ids, self.supports)
        ]
        edges = sorted(sorted(e) for e in self.edges)
        return json.dumps({"atoms": self.atom_count, "vertices": verts, "edges": edges})


def coprime_support_graph(
    n: int, shift: int = 0, extra_edges=(), use_radical: bool = False
) -> SupportGraph:
    """Encode an interval coprime graph with atoms = primes <= shift + n.

    `use_radical` swaps in squarefree kernels, which give the identical
    support structure.  `extra_edges` injects adjacencies not explained by
    supports (for exercising the primitive's failure path).
    """
    hi = shift + n
    table = primes_mod.default_table(min_limit=max(hi, 2))
    atoms = int(table.pi(hi))
    ids = list(range(shift + 1, hi + 1))

    def mask(v: int) -> int:
        if use_radical:
            rad = 1
            for p in table.support(v):
                rad *= p
            v = rad
        return table.support_mask(v)

    sups = [mask(v) for v in ids]
    edges = set()
    for i, a in enumerate(ids):
        for b in ids[i + 1 :]:
            if sups[i] & mask(b) == 0:
                edges.add(frozenset((a, b)))
    for u, v in extra_edges:
        edges.add(frozenset((u, v)))
    labels = tuple(int(p) for p in table.primes[:atoms])
    return SupportGraph(atoms, tuple(ids), tuple(sups), frozenset(edges), atom_labels=labels)


@dataclass(frozen=True)
class PrimitiveVerdict:
    passed: bool
    failure_reason: str | None = None
    failure_detail: tuple = ()
    case: str | None = None  # "one-universal" | "no-universal"
    forcing_condition: str | None = None
    forcing: bool | None = None
    forcing_clique: tuple[int, ...] | None = None
    avoiding_colors: dict | None = None  # vertex id -> 1-based color
    avoiding_bins: tuple[tuple[int, ...], ...] | None = None  # atoms per color


def check_support_model(g: SupportGraph) -> PrimitiveVerdict:
    """Verify the three model conditions; failures are verdict data."""
    covered = set()
    empties = 0
    for s in g.supports:
        if s == 0:
            empties += 1
        elif s & (s - 1) == 0:
            covered.add(s.bit_length() - 1)
    missing = [a for a in range(g.atom_count) if a not in covered]
    if missing:
        return PrimitiveVerdict(
            False, failure_reason="singleton-coverage", failure_detail=tuple(missing)
        )
    if empties > 1:
        return PrimitiveVerdict(
            False, failure_reason="empty-support-count", failure_detail=(empties,)
        )
    ids = g.vertex_ids
    for i in range(len(ids)):
        si = g.supports[i]
        for j in range(i + 1, len(ids)):
            disjoint = si & g.supports[j] == 0
            adjacent = frozenset((ids[i], ids[j])) in g.edges
            if disjoint != adjacent:
                return PrimitiveVerdict(
                    False,
                    failure_reason="adjacency-mismatch",
                    failure_detail=(ids[i], ids[j]),
                )
    case = "one-universal" if empties == 1 else "no-universal"
    return PrimitiveVerdict(True, case=case)


def decide(g: SupportGraph, d: Demands) -> PrimitiveVerdict:
    """Full primitive: model check, then forcing clique or avoiding coloring."""
    base = check_support_model(g)
    if not base.passed:
        raise ValueError(f"support model check failed: {base.failure_reason} {base.failure_detail}")
    r = g.atom_count
    M = d.M
    one_universal = base.case == "one-universal"
    forcing = r >= M if one_universal else r >= M + 1
    condition = "r >= M" if one_universal else "r >= M + 1"
    if forcing:
        # one vertex per singleton atom, plus the universal vertex if present
        chosen: dict[int, int] = {}
        universal = None
        for vid, s in zip(g.vertex_ids, g.supports):
            if s == 0:
                universal = vid
            elif s & (s - 1) == 0:
                chosen.setdefault(s.bit_length() - 1, vid)
        clique = ([universal] if universal is not None else []) + [
            chosen[a] for a in sorted(chosen)
        ]
        return PrimitiveVerdict(
            True,
            case=base.case,
            forcing_condition=condition,
            forcing=True,
            forcing_clique=tuple(clique),
        )
    # avoiding: partition atoms into capacity bins, then color by membership
    caps = [d.ks[0] - (2 if one_universal else 1)] + [k - 1 for k in d.ks[1:]]
    bins: list[tuple[int, ...]] = []
    pos = 0
    atoms = list(range(r))
    for cap in caps:
        take = min(cap, r - pos)
        bins.append(tuple(atoms[pos : pos + take]))
        pos += take
    if pos < r:
        raise AssertionError("capacities below rank despite non-forcing verdict")
    atom_color = {a: i + 1 for i, b in enumerate(bins) for a in b}
    coloring: dict[int, int] = {}
    for vid, s in zip(g.vertex_ids, g.supports):
        if s == 0:
            coloring[vid] = 1
            continue
        col = None
        for a in range(r):
            if s >> a & 1 and a in atom_color:
                col = atom_color[a]
                break
        # full-support vertices in tiny atom sets always meet bin 1 first;
        # isolated full-support vertices never join a clique of size >= 2
        coloring[vid] = col if col is not None else 1
    return PrimitiveVerdict(
        True,
        case=base.case,
        forcing_condition=condition,
        forcing=False,
        avoiding_colors=coloring,
        avoiding_bins=tuple(bins),
    )


def verify_avoiding_coloring(g: SupportGraph, verdict: PrimitiveVerdict, d: Demands) -> bool:
    """Atom-level analogue of the divisor certificate check."""
    if verdict.avoiding_colors is None or verdict.avoiding_bins is None:
        return False
    bins = verdict.avoiding_bins
    binmasks = [sum(1 << a for a in b) for b in bins]
    for vid, s in zip(g.vertex_ids, g.supports):
        col = verdict.avoiding_colors[vid]
        if s == 0:
            if col != 1:
                return False
        elif s & binmasks[col - 1] == 0:
            return False
    return True
