"""Direct CNF encoding of the avoiding-coloring decision problem.

Variables x_{v,i} ("vertex v gets color i") map to the 1-based DIMACS index
(v-1)*c + i.  The indexing is a tested contract: a color outside 1..c raises
instead of silently landing on an unrelated variable.  Clause counts follow
n (at-least-one) + n*C(c,2) (at-most-one) + c*(coprime k-clique count).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import primes as primes_mod
from .graph import enumerate_coprime_cliques, interval_graph
from .thresholds import demands, r_cop


@dataclass(frozen=True)
class CnfFormula:
    n: int
    k: int
    c: int
    clique_count: int
    clauses: tuple[tuple[int, ...], ...]

    @property
    def num_vars(self) -> int:
        return self.n * self.c

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)


def var_index(v: int, i: int, n: int, c: int) -> int:
    """DIMACS variable of x_{v,i}; rejects out-of-range vertex or color."""
    if not 1 <= v <= n:
        raise ValueError(f"vertex {v} outside 1..{n}")
    if not 1 <= i <= c:
        raise ValueError(f"color {i} outside 1..{c}")
    return (v - 1) * c + i


def clause_count(n: int, c: int, cliques: int) -> int:
    return n + n * (c * (c - 1) // 2) + c * cliques


def encode(n: int, k: int, c: int = 2) -> CnfFormula:
    """Materialized formula; satisfiable iff an avoiding c-coloring exists."""
    if n < 1 or k < 2 or c < 1:
        raise ValueError("need n >= 1, k >= 2, c >= 1")
    clauses: list[tuple[int, ...]] = []
    for v in range(1, n + 1):
        clauses.append(tuple(var_index(v, i, n, c) for i in range(1, c + 1)))
    for v in range(1, n + 1):
        for i in range(1, c + 1):
            for j in range(i + 1, c + 1):
                clauses.append((-var_index(v, i, n, c), -var_index(v, j, n, c)))
    g = interval_graph(n)
    cliques = 0

    def emit(q):
        nonlocal cliques
        cliques += 1
        for i in range(1, c + 1):
            clauses.append(tuple(-var_index(v, i, n, c) for v in q))

    if k <= n:
        enumerate_coprime_cliques(g, k, visitor=emit)
    f = CnfFormula(n=n, k=k, c=c, clique_count=cliques, clauses=tuple(clauses))
    assert f.num_clauses == clause_count(n, c, cliques)
    return f


def write_dimacs(f: CnfFormula, sink, comment: bool = False) -> None:
    """Standard DIMACS CNF with LF endings; sink is a binary file object."""
    if comment:
        sink.write(f"c n={f.n} k={f.k} c={f.c} x_(v,i) -> (v-1)*c+i\n".encode())
    sink.write(f"p cnf {f.num_vars} {f.num_clauses}\n".encode())
    for cl in f.clauses:
        sink.write((" ".join(str(x) for x in cl) + " 0\n").encode())


def stream_dimacs(n: int, k: int, c: int, sink, comment: bool = False) -> int:
    """Write the encoding without materializing clauses; returns clause count.

    Anti-monochromatic clauses are emitted straight from the clique visitor,
    so multi-million-clause instances stay within constant memory.  The
    header needs the clause count up front, so cliques are counted first.
    """
    g = interval_graph(n)
    cliques = enumerate_coprime_cliques(g, k) if k <= n else 0
    total = clause_count(n, c, cliques)
    if comment:
        sink.write(f"c n={n} k={k} c={c} x_(v,i) -> (v-1)*c+i\n".encode())
    sink.write(f"p cnf {n * c} {total}\n".encode())
    for v in range(1, n + 1):
        sink.write((" ".join(str(var_index(v, i, n, c)) for i in range(1, c + 1)) + " 0\n").encode())
    for v in range(1, n + 1):
        for i in range(1, c + 1):
            for j in range(i + 1, c + 1):
                sink.write(f"-{var_index(v, i, n, c)} -{var_index(v, j, n, c)} 0\n".encode())

    def emit(q):
        for i in range(1, c + 1):
            sink.write((" ".join(str(-var_index(v, i, n, c)) for v in q) + " 0\n").encode())

    if k <= n:
        enumerate_coprime_cliques(g, k, visitor=emit)
    return total


def parse_dimacs(data: bytes) -> tuple[int, list[tuple[int, ...]]]:
    """Inverse of write_dimacs, for round-trip checks."""
    num_vars = 0
    clauses: list[tuple[int, ...]] = []
    for line in data.decode().splitlines():
        line = line.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            num_vars = int(parts[2])
            continue
        lits = [int(x) for x in line.split()]
        if lits[-1] != 0:
            raise ValueError("clause line not 0-terminated")
        clauses.append(tuple(lits[:-1]))
    return num_vars, clauses


def dpll(clauses, num_vars: int) -> dict[int, bool] | None:
    """Tiny satisfiability check for agreement tests on desk instances."""
    assign: dict[int, bool] = {}

    def solve(clauses) -> bool:
        while True:
            unit = None
            simplified = []
            for cl in clauses:
                live = []
                sat = False
                for lit in cl:
                    v = abs(lit)
                    if v in assign:
                        if assign[v] == (lit > 0):
                            sat = True
                            break
                    else:
                        live.append(lit)
                if sat:
                    continue
                if not live:
                    return False
                if len(live) == 1 and unit is None:
                    unit = live[0]
                simplified.append(live)
            clauses = simplified
            if unit is None:
                break
            assign[abs(unit)] = unit > 0
        if not clauses:
            return True
        lit = clauses[0][0]
        for choice in (lit > 0, lit <= 0):
            saved = dict(assign)
            assign[abs(lit)] = choice
            if solve(clauses):
                return True
            assign.clear()
            assign.update(saved)
        return False

    if solve(list(clauses)):
        return assign
    return None


def diagnostics_table(ks) -> list[tuple[int, int, int, int, int, int]]:
    """(k, threshold, certificate rank 2k-1, all-K_k count at the threshold,
    prime-clique K_k count C(2k-1, k), two-color clause count)."""
    rows = []
    for k in ks:
        n = r_cop(demands(k, k))
        g = interval_graph(n)
        total = enumerate_coprime_cliques(g, k)
        rank = 2 * k - 1
        rows.append((k, n, rank, total, math.comb(rank, k), clause_count(n, 2, total)))
    return rows
