"""Rotation systems, face traversal, duals and embedding-preserving rewrites.

A rotation system maps every vertex to the counterclockwise cyclic order of
its neighbors.  Faces are traced with the usual rule: after arriving at
``v`` along ``u -> v``, leave along ``v -> w`` where ``w`` follows ``u`` in
the rotation at ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Mapping

from . import graph as gc
from .graph import Edge, Graph, GraphError, Vertex, VertexLabel

Rotation = dict  # vertex -> tuple of neighbors, counterclockwise
Dart = tuple  # (tail, head)

DEFAULT_MAX_VERTICES = 12


class EmbeddingError(ValueError):
    """Malformed rotation system, nonplanar embedding, or missing embedding."""


# -- validation and faces ---------------------------------------------------------


def validate_rotation(g: Graph, rot: Mapping[Vertex, tuple]) -> None:
    if set(rot) != set(g.vertices):
        raise EmbeddingError("rotation system does not cover exactly the vertex set")
    for v in g:
        order = tuple(rot[v])
        if len(order) != len(set(order)) or set(order) != g.neighbors(v):
            raise EmbeddingError(f"rotation at {v!r} does not match its neighbors")


def _successor_maps(rot: Mapping[Vertex, tuple]) -> dict:
    succ = {}
    for v, order in rot.items():
        d = len(order)
        succ[v] = {order[i]: order[(i + 1) % d] for i in range(d)}
    return succ


def faces(g: Graph, rot: Mapping[Vertex, tuple]) -> list[list[Dart]]:
    """All face walks of the embedding, each a cyclic list of darts."""
    validate_rotation(g, rot)
    succ = _successor_maps(rot)
    darts = []
    for u, v in g.edge_pairs():
        darts.append((u, v))
        darts.append((v, u))
    seen: set = set()
    out = []
    for start in darts:
        if start in seen:
            continue
        walk = []
        d = start
        while d not in seen:
            seen.add(d)
            walk.append(d)
            u, v = d
            d = (v, succ[v][u])
        out.append(walk)
    if len(g) == 1 and not darts:
        out.append([])
    return out


def euler_characteristic(g: Graph, rot: Mapping[Vertex, tuple]) -> int:
    return len(g) - g.num_edges + len(faces(g, rot))


def check_planar_embedding(g: Graph, rot: Mapping[Vertex, tuple]) -> bool:
    """Genus-0 test: ``V - E + F == 2`` for a connected graph."""
    if not gc.is_connected(g):
        raise EmbeddingError("planarity check needs a connected graph")
    return euler_characteristic(g, rot) == 2


# -- finding embeddings -------------------------------------------------------------


def _cyclic_orders(nbrs: list, halve: bool) -> list[tuple]:
    if len(nbrs) <= 2:
        return [tuple(nbrs)]
    first, rest = nbrs[0], nbrs[1:]
    out = []
    for p in permutations(rest):
        if halve and repr(p[0]) > repr(p[-1]):
            continue
        out.append((first, *p))
    return out


def find_planar_embedding_exhaustive(
    g: Graph, max_vertices: int = DEFAULT_MAX_VERTICES
) -> Rotation | None:
    """Search every rotation system (up to global reflection) for a planar one."""
    if not gc.is_connected(g):
        raise EmbeddingError("embedding search needs a connected graph")
    if len(g) > max_vertices:
        raise EmbeddingError(
            f"embedding required: {len(g)} vertices exceeds the exhaustive bound {max_vertices}"
        )
    verts = list(g.vertices)
    pos = g.order_index()
    halved = False
    choices = []
    for v in verts:
        nbrs = sorted(g.neighbors(v), key=pos.__getitem__)
        halve = not halved and len(nbrs) >= 3
        halved = halved or halve
        choices.append(_cyclic_orders(nbrs, halve))
    for combo in product(*choices):
        rot = dict(zip(verts, combo))
        if euler_characteristic(g, rot) == 2:
            return rot
    return None


def find_planar_embedding(
    g: Graph, method: str = "lr", max_vertices: int = DEFAULT_MAX_VERTICES
) -> Rotation | None:
    """Return a planar rotation system for ``g`` or ``None`` if it is nonplanar.

    ``method="lr"`` uses networkx's left-right planarity test and re-validates
    the result with the Euler check; ``method="exhaustive"`` enumerates
    rotation systems and refuses graphs above ``max_vertices``.
    """
    if method == "exhaustive":
        return find_planar_embedding_exhaustive(g, max_vertices)
    if method != "lr":
        raise ValueError(f"unknown method {method!r}")
    import networkx as nx

    if not gc.is_connected(g):
        raise EmbeddingError("embedding search needs a connected graph")
    nxg = nx.Graph()
    nxg.add_nodes_from(g.vertices)
    nxg.add_edges_from(tuple(e) for e in g.edges)
    planar, emb = nx.check_planarity(nxg)
    if not planar:
        return None
    rot = {v: tuple(reversed(list(emb.neighbors_cw_order(v)))) for v in g}
    if not check_planar_embedding(g, rot):
        raise EmbeddingError("planarity backend returned an invalid embedding")
    return rot


# -- combinatorial maps and duals ----------------------------------------------


def _orbits(perm: list[int]) -> list[list[int]]:
    seen = [False] * len(perm)
    out = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        orb = []
        d = start
        while not seen[d]:
            seen[d] = True
            orb.append(d)
            d = perm[d]
        out.append(orb)
    return out


@dataclass
class DualGraph:
    """Embedded multigraph; edge ``k`` is dual to ``primal_edges[k]``.

    Darts ``2k`` and ``2k+1`` are the two sides of edge ``k``; ``sigma`` is the
    rotation permutation on darts, so the structure can be dualised again.
    """

    num_vertices: int
    edges: list[tuple[int, int]]
    primal_edges: list
    sigma: list[int] = field(repr=False)
    vertex_of_dart: list[int] = field(repr=False)

    @classmethod
    def from_sigma(cls, sigma: list[int], primal_edges: list) -> "DualGraph":
        orbits = _orbits(sigma)
        vertex_of = [0] * len(sigma)
        for i, orb in enumerate(orbits):
            for d in orb:
                vertex_of[d] = i
        edges = [(vertex_of[2 * k], vertex_of[2 * k + 1]) for k in range(len(sigma) // 2)]
        return cls(len(orbits), edges, list(primal_edges), list(sigma), vertex_of)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def face_permutation(self) -> list[int]:
        return [self.sigma[d ^ 1] for d in range(len(self.sigma))]

    def num_faces(self) -> int:
        return len(_orbits(self.face_permutation()))

    def edge_index(self) -> dict:
        return {e: k for k, e in enumerate(self.primal_edges)}

    def is_connected(self) -> bool:
        parent = list(range(self.num_vertices))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.edges:
            parent[find(a)] = find(b)
        return len({find(x) for x in range(self.num_vertices)}) <= 1

    def is_planar(self) -> bool:
        return self.num_vertices - self.num_edges + self.num_faces() == 2

    def dual(self) -> "DualGraph":
        """Dual of this embedded multigraph (edge ``k`` stays edge ``k``)."""
        return DualGraph.from_sigma(self.face_permutation(), list(range(self.num_edges)))


def dart_sigma(g: Graph, rot: Mapping[Vertex, tuple]) -> tuple[list[int], list]:
    """Encode ``(g, rot)`` as a dart rotation permutation."""
    validate_rotation(g, rot)
    pairs = g.edge_pairs()
    dart_id = {}
    for k, (u, v) in enumerate(pairs):
        dart_id[(u, v)] = 2 * k
        dart_id[(v, u)] = 2 * k + 1
    succ = _successor_maps(rot)
    sigma = [0] * (2 * len(pairs))
    for (u, v), d in dart_id.items():
        sigma[d] = dart_id[(u, succ[u][v])]
    return sigma, [frozenset(p) for p in pairs]


def as_multigraph(g: Graph, rot: Mapping[Vertex, tuple]) -> DualGraph:
    """View a simple embedded graph through the dart-based multigraph type."""
    sigma, edges = dart_sigma(g, rot)
    return DualGraph.from_sigma(sigma, edges)


def dual(g: Graph, rot: Mapping[Vertex, tuple]) -> DualGraph:
    if not check_planar_embedding(g, rot):
        raise EmbeddingError("dual requires a planar embedding")
    sigma, edges = dart_sigma(g, rot)
    primal = DualGraph.from_sigma(sigma, edges)
    return DualGraph.from_sigma(primal.face_permutation(), edges)


# -- embedding-preserving rewrites ------------------------------------------------


def _replace(order: tuple, old, new) -> tuple:
    return tuple(new if x == old else x for x in order)


def subdivide(
    g: Graph, rot: Rotation, e: Edge, label: VertexLabel | None = None
) -> tuple[Graph, Rotation, Vertex]:
    u, v = tuple(e)
    g2, w = gc.subdivide_edge(g, e, label)
    rot2 = dict(rot)
    rot2[u] = _replace(rot[u], v, w)
    rot2[v] = _replace(rot[v], u, w)
    rot2[w] = (u, v)
    return g2, rot2, w


def contract(
    g: Graph, rot: Rotation, e: Edge, label: VertexLabel | None = None, first: Vertex | None = None
) -> tuple[Graph, Rotation, Vertex]:
    """Contract ``e``; the merged rotation splices both endpoint rotations."""
    u, v = tuple(e)
    if first is not None and first == v:
        u, v = v, u
    g2, w = gc.contract_edge(g, e, label)
    ru, rv = rot[u], rot[v]
    iu, iv = ru.index(v), rv.index(u)
    merged = ru[iu + 1 :] + ru[:iu] + rv[iv + 1 :] + rv[:iv]
    rot2 = {x: o for x, o in rot.items() if x not in (u, v)}
    for x in merged:
        rot2[x] = _replace(_replace(rot2[x], u, w), v, w)
    rot2[w] = merged
    return g2, rot2, w


def delete_vertex(g: Graph, rot: Rotation, v: Vertex) -> tuple[Graph, Rotation]:
    g2 = gc.delete_vertex(g, v)
    rot2 = {x: tuple(y for y in o if y != v) for x, o in rot.items() if x != v}
    return g2, rot2


def delete_edge(g: Graph, rot: Rotation, e: Edge) -> tuple[Graph, Rotation]:
    u, v = tuple(e)
    g2 = gc.delete_edge(g, e)
    rot2 = dict(rot)
    rot2[u] = tuple(x for x in rot[u] if x != v)
    rot2[v] = tuple(x for x in rot[v] if x != u)
    return g2, rot2


__all__ = [
    "DualGraph",
    "EmbeddingError",
    "GraphError",
    "Rotation",
    "as_multigraph",
    "check_planar_embedding",
    "contract",
    "delete_edge",
    "delete_vertex",
    "dual",
    "euler_characteristic",
    "faces",
    "find_planar_embedding",
    "find_planar_embedding_exhaustive",
    "subdivide",
    "validate_rotation",
]
