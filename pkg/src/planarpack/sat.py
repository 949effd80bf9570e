"""CNF expressions over a cyclically ordered variable set, and their graphs.

Literals use the DIMACS convention: ``k`` is x_k and ``-k`` is its negation.
Assignments are tuples of ``+1``/``-1`` indexed by variable number minus one.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .graph import MINUS, NEUTRAL, PLUS, Graph, VertexLabel

MIN_VARIABLES = 3
DEFAULT_SAT_BOUND = 20

Assignment = tuple


class BudgetExceeded(RuntimeError):
    """A search would exceed its configured bound; distinct from a NO answer."""


@dataclass(frozen=True)
class PlanarCnf:
    n: int
    clauses: tuple[frozenset, ...]

    def __post_init__(self):
        for c in self.clauses:
            for lit in c:
                if lit == 0 or abs(lit) > self.n:
                    raise ValueError(f"literal {lit} out of range 1..{self.n}")
                if -lit in c:
                    raise ValueError(f"clause {sorted(c)} contains a complementary pair")

    @property
    def m(self) -> int:
        return len(self.clauses)

    def occurrences(self, i: int) -> list[tuple[int, int]]:
        """(clause number, sign) for every occurrence of variable ``i``."""
        out = []
        for j, c in enumerate(self.clauses, start=1):
            for lit in c:
                if abs(lit) == i:
                    out.append((j, 1 if lit > 0 else -1))
        return out

    def literal_count(self) -> int:
        return sum(len(c) for c in self.clauses)

    def to_dimacs(self) -> str:
        lines = [f"p cnf {self.n} {self.m}"]
        for c in self.clauses:
            lits = sorted(c, key=lambda x: (abs(x), x))
            lines.append(" ".join(str(x) for x in lits) + " 0")
        return "\n".join(lines) + "\n"


def normalize(clauses: Iterable[Iterable[int]], n: int | None = None) -> PlanarCnf:
    """Drop tautological clauses, deduplicate literals, pad to three variables.

    ``n`` defaults to the largest variable mentioned.  Padding variables occur
    in no clause, so satisfiability is unchanged.
    """
    raw = [list(c) for c in clauses]
    top = max((abs(x) for c in raw for x in c), default=0)
    if n is None:
        n = top
    for c in raw:
        for lit in c:
            if lit == 0 or abs(lit) > n:
                raise ValueError(f"literal {lit} out of range 1..{n}")
    kept = []
    for c in raw:
        s = frozenset(c)
        if any(-x in s for x in s):
            continue
        kept.append(s)
    return PlanarCnf(max(n, MIN_VARIABLES), tuple(kept))


def evaluate(phi: PlanarCnf, f: Sequence[int]) -> bool:
    """True iff every clause holds a literal made true by ``f``."""
    if len(f) != phi.n:
        raise ValueError("assignment must cover every variable")
    return all(any(f[abs(lit) - 1] == (1 if lit > 0 else -1) for lit in c) for c in phi.clauses)


def brute_force_sat(phi: PlanarCnf, bound: int = DEFAULT_SAT_BOUND) -> Assignment | None:
    """First satisfying assignment in lexicographic order with + before -."""
    if phi.n > bound:
        raise BudgetExceeded(f"{phi.n} variables exceeds the brute-force bound {bound}")
    for f in product((PLUS, MINUS), repeat=phi.n):
        if evaluate(phi, f):
            return f
    return None


def satisfying_assignments(phi: PlanarCnf) -> list[Assignment]:
    return [f for f in product((PLUS, MINUS), repeat=phi.n) if evaluate(phi, f)]


# -- associated graph -------------------------------------------------------------


def var_id(phi: PlanarCnf, i: int) -> int:
    return i - 1


def clause_id(phi: PlanarCnf, j: int) -> int:
    return phi.n + j - 1


def associated_graph(phi: PlanarCnf) -> Graph:
    """Variables on a cycle plus one vertex per clause, with signed edges."""
    if phi.n < MIN_VARIABLES:
        raise ValueError("associated graph needs at least three variables")
    n = phi.n
    verts = [var_id(phi, i) for i in range(1, n + 1)]
    verts += [clause_id(phi, j) for j in range(1, phi.m + 1)]
    labels = {var_id(phi, i): VertexLabel("Var", (i,)) for i in range(1, n + 1)}
    labels.update({clause_id(phi, j): VertexLabel("Clause", (j,)) for j in range(1, phi.m + 1)})
    edges = []
    colors = {}
    for i in range(1, n + 1):
        u, v = var_id(phi, i), var_id(phi, i % n + 1)
        edges.append((u, v))
        colors[frozenset((u, v))] = NEUTRAL
    for j, c in enumerate(phi.clauses, start=1):
        for lit in sorted(c, key=abs):
            u, v = var_id(phi, abs(lit)), clause_id(phi, j)
            edges.append((u, v))
            colors[frozenset((u, v))] = PLUS if lit > 0 else MINUS
    return Graph(verts, edges, labels, colors, name="G_phi")


# -- DIMACS ---------------------------------------------------------------------


def parse_dimacs(text: str, pad: bool = True) -> PlanarCnf:
    n = m = None
    clauses: list[list[int]] = []
    current: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad problem line {line!r}")
            n, m = int(parts[2]), int(parts[3])
            continue
        for tok in re.split(r"\s+", line):
            lit = int(tok)
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if current:
        clauses.append(current)
    if n is None:
        raise ValueError("missing 'p cnf' header")
    if m is not None and m != len(clauses):
        raise ValueError(f"header declares {m} clauses, found {len(clauses)}")
    if not pad:
        return PlanarCnf(n, tuple(frozenset(c) for c in clauses))
    return normalize(clauses, n)


def read_dimacs(path) -> PlanarCnf:
    with open(path, encoding="utf-8") as fh:
        return parse_dimacs(fh.read())
