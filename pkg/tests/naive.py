"""Subset-enumeration references, deliberately independent of the solvers.

Every predicate is checked from scratch with networkx so that a shared bug
in the package's own graph helpers cannot make both sides agree.
"""

from __future__ import annotations

from itertools import combinations

import networkx as nx

from planarpack.graph import Graph


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(tuple(e) for e in g.edges)
    return h


def _remaining_connected(h: nx.Graph, sub) -> bool:
    r = h.copy()
    r.remove_edges_from(sub)
    return nx.is_connected(r)


def _classify(sub):
    """'cycle', ('path', a, b) or None for an edge subset."""
    s = nx.Graph(list(sub))
    if not nx.is_connected(s):
        return None
    degs = sorted(d for _, d in s.degree())
    if all(d == 2 for d in degs) and len(sub) >= 3:
        return "cycle"
    if degs[:2] == [1, 1] and all(d == 2 for d in degs[2:]):
        a, b = sorted((v for v, d in s.degree() if d == 1), key=str)
        return ("path", a, b)
    return None


def nonseparating_structures(g: Graph):
    """Every nonseparating cycle (as edge sets) and the endpoint pairs of nonseparating paths."""
    h = to_nx(g)
    es = list(h.edges)
    cycles, pairs = [], set()
    for r in range(1, len(h) + 1):
        for sub in combinations(es, r):
            kind = _classify(sub)
            if kind is None or not _remaining_connected(h, sub):
                continue
            if kind == "cycle":
                cycles.append(frozenset(frozenset(e) for e in sub))
            else:
                pairs.add(frozenset(kind[1:]))
    return cycles, pairs


def has_partition(g: Graph) -> bool:
    h = to_nx(g)
    es = list(h.edges)
    n = len(h)
    for sub in combinations(es, n - 1):
        s = nx.Graph(list(sub))
        s.add_nodes_from(h)
        if not nx.is_tree(s):
            continue
        rest = [e for e in es if e not in sub and (e[1], e[0]) not in sub]
        if not rest or nx.is_tree(nx.Graph(rest)):
            return True
    return False


def has_acyclic_cut(g: Graph) -> bool:
    h = to_nx(g)
    vs = list(h)
    for r in range(1, len(vs)):
        for side in combinations(vs, r):
            side = set(side)
            cut = [e for e in h.edges if (e[0] in side) != (e[1] in side)]
            if cut and nx.is_forest(nx.Graph(cut)):
                return True
    return False


def connected_atlas(max_vertices: int = 6):
    """All connected graphs up to isomorphism with at most ``max_vertices`` vertices."""
    for h in nx.graph_atlas_g()[1:]:
        if len(h) <= max_vertices and nx.is_connected(h):
            yield Graph(list(h.nodes), list(h.edges))
