"""Undirected simple graphs with vertex labels and edge colors.

Graphs are treated as immutable values: every rewrite returns a new
``Graph`` and leaves its argument untouched.  Vertex ids are opaque
hashables (ints for everything the reductions build, strings for
hand-written fixtures); fresh integer ids are handed out monotonically so
that constructions are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Hashable, Iterable, Iterator, Mapping

Vertex = Hashable
Edge = frozenset

PLUS = 1
MINUS = -1
NEUTRAL = 0


class GraphError(ValueError):
    """Raised when an operation would violate the simple-graph invariants."""


@dataclass(frozen=True, order=True)
class VertexLabel:
    """Provenance tag of a vertex, e.g. ``VertexLabel("PathV", (1, -1, 4))``."""

    kind: str
    idx: tuple = ()

    def __str__(self) -> str:
        if not self.idx:
            return self.kind
        return self.kind + ":" + ",".join(str(x) for x in self.idx)

    @classmethod
    def parse(cls, text: str) -> "VertexLabel":
        kind, _, rest = text.partition(":")
        if not kind:
            raise ValueError(f"bad label {text!r}")
        idx = tuple(int(x) for x in rest.split(",")) if rest else ()
        return cls(kind, idx)


def edge(u: Vertex, v: Vertex) -> Edge:
    if u == v:
        raise GraphError(f"self-loop at {u!r}")
    return frozenset((u, v))


class Graph:
    """A simple undirected graph with optional labels and edge colors."""

    __slots__ = ("_adj", "_labels", "_colors", "_next_id", "name")

    def __init__(
        self,
        vertices: Iterable[Vertex] = (),
        edges: Iterable[tuple[Vertex, Vertex]] = (),
        labels: Mapping[Vertex, VertexLabel] | None = None,
        colors: Mapping[Edge, int] | None = None,
        name: str = "G",
    ) -> None:
        adj: dict[Vertex, set] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise GraphError(f"self-loop at {u!r}")
            if u not in adj or v not in adj:
                raise GraphError(f"edge {u!r}-{v!r} has an endpoint outside the vertex set")
            if v in adj[u]:
                raise GraphError(f"parallel edge {u!r}-{v!r}")
            adj[u].add(v)
            adj[v].add(u)
        self._adj = adj
        self._labels = dict(labels or {})
        self._colors = {e: c for e, c in (colors or {}).items() if c != NEUTRAL}
        for e in self._colors:
            u, v = tuple(e)
            if v not in adj.get(u, ()):
                raise GraphError(f"color on missing edge {u!r}-{v!r}")
        seen: dict[VertexLabel, Vertex] = {}
        for v, lab in self._labels.items():
            if v not in adj:
                raise GraphError(f"label on missing vertex {v!r}")
            if lab in seen:
                raise GraphError(f"label {lab} used twice ({seen[lab]!r}, {v!r})")
            seen[lab] = v
        ints = [v for v in adj if isinstance(v, int) and not isinstance(v, bool)]
        self._next_id = max(ints) + 1 if ints else 0
        self.name = name

    # -- queries -----------------------------------------------------------

    @property
    def vertices(self) -> tuple:
        return tuple(self._adj)

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator[Vertex]:
        return iter(self._adj)

    def order_index(self) -> dict:
        return {v: i for i, v in enumerate(self._adj)}

    @property
    def edges(self) -> list[Edge]:
        """All edges, ordered by the insertion order of their endpoints."""
        pos = self.order_index()
        out = []
        for u in self._adj:
            for v in sorted(self._adj[u], key=pos.__getitem__):
                if pos[u] < pos[v]:
                    out.append(frozenset((u, v)))
        return out

    def edge_pairs(self) -> list[tuple]:
        pos = self.order_index()
        return [tuple(sorted(e, key=pos.__getitem__)) for e in self.edges]

    @property
    def num_edges(self) -> int:
        return sum(len(n) for n in self._adj.values()) // 2

    def neighbors(self, v: Vertex) -> frozenset:
        return frozenset(self._adj[v])

    def degree(self, v: Vertex) -> int:
        return len(self._adj[v])

    def max_degree(self) -> int:
        return max((len(n) for n in self._adj.values()), default=0)

    def has_edge(self, u: Vertex, v: Vertex) -> bool:
        return u in self._adj and v in self._adj[u]

    def label(self, v: Vertex) -> VertexLabel | None:
        return self._labels.get(v)

    @property
    def labels(self) -> dict:
        return dict(self._labels)

    def find(self, kind: str, *idx) -> Vertex:
        """Return the vertex carrying label ``kind{idx}``."""
        target = VertexLabel(kind, tuple(idx))
        for v, lab in self._labels.items():
            if lab == target:
                return v
        raise KeyError(str(target))

    def label_index(self) -> dict[VertexLabel, Vertex]:
        return {lab: v for v, lab in self._labels.items()}

    def color(self, e: Edge) -> int:
        return self._colors.get(e, NEUTRAL)

    @property
    def colors(self) -> dict:
        return dict(self._colors)

    def fresh_id(self) -> int:
        return self._next_id

    def check_edges(self, es: Iterable[Edge]) -> frozenset:
        es = frozenset(frozenset(e) for e in es)
        for e in es:
            u, v = tuple(e) if len(e) == 2 else (None, None)
            if not self.has_edge(u, v):
                raise GraphError(f"edge {sorted(map(str, e))} not in graph")
        return es

    # -- construction helpers ------------------------------------------------

    def _copy_parts(self):
        return {v: set(n) for v, n in self._adj.items()}, dict(self._labels), dict(self._colors)

    @classmethod
    def _from_parts(cls, adj, labels, colors, name, next_id) -> "Graph":
        g = cls.__new__(cls)
        g._adj = adj
        g._labels = labels
        g._colors = {e: c for e, c in colors.items() if c != NEUTRAL}
        g.name = name
        ints = [v for v in adj if isinstance(v, int) and not isinstance(v, bool)]
        g._next_id = max([next_id, *(v + 1 for v in ints)])
        return g

    def extend(
        self,
        vertices: Iterable[Vertex] = (),
        edges: Iterable[tuple[Vertex, Vertex]] = (),
        labels: Mapping[Vertex, VertexLabel] | None = None,
        colors: Mapping[Edge, int] | None = None,
    ) -> "Graph":
        """Return a copy with extra vertices, edges, labels and colors."""
        adj, labs, cols = self._copy_parts()
        for v in vertices:
            if v in adj:
                raise GraphError(f"vertex {v!r} already present")
            adj[v] = set()
        for u, v in edges:
            if u == v or u not in adj or v not in adj or v in adj[u]:
                raise GraphError(f"cannot add edge {u!r}-{v!r}")
            adj[u].add(v)
            adj[v].add(u)
        used = set(labs.values())
        for v, lab in (labels or {}).items():
            if lab in used:
                raise GraphError(f"label {lab} used twice")
            used.add(lab)
            labs[v] = lab
        cols.update(colors or {})
        return Graph._from_parts(adj, labs, cols, self.name, self._next_id)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (
            self._adj == other._adj
            and self._labels == other._labels
            and self._colors == other._colors
        )

    def __repr__(self) -> str:
        return f"Graph({self.name!r}, |V|={len(self)}, |E|={self.num_edges})"


# -- predicates -----------------------------------------------------------------


def components(g: Graph, removed: Iterable[Edge] = ()) -> list[list]:
    """Connected components of ``g`` minus the edge set ``removed``."""
    removed = set(removed)
    seen: set = set()
    out = []
    for root in g:
        if root in seen:
            continue
        comp = [root]
        seen.add(root)
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in g._adj[u]:
                if w not in seen and frozenset((u, w)) not in removed:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return len(g) > 0 and len(components(g)) == 1


def is_connected_after_removal(g: Graph, removed: Iterable[Edge]) -> bool:
    """True iff ``(V(g), E(g) - removed)`` is connected."""
    removed = g.check_edges(removed)
    if len(g) == 0:
        raise GraphError("empty graph")
    return len(components(g, removed)) == 1


def _span(edges: Iterable[Edge]) -> set:
    out: set = set()
    for e in edges:
        out.update(e)
    return out


def _is_forest(vertices: Iterable, edges: Iterable[Edge]) -> bool:
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        a, b = (find(x) for x in e)
        if a == b:
            return False
        parent[a] = b
    return True


def is_tree(g: Graph, s: Iterable[Edge]) -> bool:
    """True iff the nonempty edge set ``s`` spans a connected acyclic subgraph.

    The empty edge set is rejected here; callers that admit the trivial tree
    handle it themselves (see :func:`planarpack.solvers.check_witness`).
    """
    s = g.check_edges(s)
    if not s:
        return False
    verts = _span(s)
    return len(s) == len(verts) - 1 and _is_forest(verts, s)


def is_spanning_tree(g: Graph, s: Iterable[Edge]) -> bool:
    s = g.check_edges(s)
    if len(s) != len(g) - 1:
        return False
    return _is_forest(g.vertices, s)


# -- rewrites -------------------------------------------------------------------


def subdivide_edge(
    g: Graph, e: Edge, label: VertexLabel | None = None, new: Vertex | None = None
) -> tuple[Graph, Vertex]:
    """Replace edge ``e`` by a path through a fresh vertex; both halves keep e's color."""
    e = frozenset(e)
    u, v = tuple(e)
    if not g.has_edge(u, v):
        raise GraphError(f"no edge {u!r}-{v!r}")
    w = g.fresh_id() if new is None else new
    if w in g:
        raise GraphError(f"vertex {w!r} already present")
    adj, labs, cols = g._copy_parts()
    adj[u].discard(v)
    adj[v].discard(u)
    adj[w] = {u, v}
    adj[u].add(w)
    adj[v].add(w)
    c = cols.pop(e, NEUTRAL)
    cols[frozenset((u, w))] = c
    cols[frozenset((w, v))] = c
    if label is not None:
        if label in labs.values():
            raise GraphError(f"label {label} used twice")
        labs[w] = label
    return Graph._from_parts(adj, labs, cols, g.name, g._next_id), w


def contract_edge(
    g: Graph, e: Edge, label: VertexLabel | None = None, new: Vertex | None = None
) -> tuple[Graph, Vertex]:
    """Merge the endpoints of ``e`` into a fresh vertex.

    Raises :class:`GraphError` if the endpoints share a neighbor, since the
    result would have parallel edges.
    """
    e = frozenset(e)
    u, v = tuple(e)
    if not g.has_edge(u, v):
        raise GraphError(f"no edge {u!r}-{v!r}")
    common = g._adj[u] & g._adj[v]
    if common:
        raise GraphError(f"contracting {u!r}-{v!r} would create parallel edges (common neighbor)")
    w = g.fresh_id() if new is None else new
    if w in g:
        raise GraphError(f"vertex {w!r} already present")
    adj, labs, cols = g._copy_parts()
    cols.pop(e, None)
    nbrs = (adj.pop(u) | adj.pop(v)) - {u, v}
    adj[w] = set(nbrs)
    for x in nbrs:
        for old in (u, v):
            if old in adj[x]:
                adj[x].discard(old)
                c = cols.pop(frozenset((old, x)), NEUTRAL)
                cols[frozenset((w, x))] = c
        adj[x].add(w)
    labs.pop(u, None)
    labs.pop(v, None)
    if label is not None:
        labs[w] = label
    return Graph._from_parts(adj, labs, cols, g.name, g._next_id), w


def delete_vertex(g: Graph, v: Vertex) -> Graph:
    if v not in g:
        raise GraphError(f"no vertex {v!r}")
    adj, labs, cols = g._copy_parts()
    for x in adj.pop(v):
        adj[x].discard(v)
        cols.pop(frozenset((v, x)), None)
    labs.pop(v, None)
    return Graph._from_parts(adj, labs, cols, g.name, g._next_id)


def delete_edge(g: Graph, e: Edge) -> Graph:
    e = frozenset(e)
    u, v = tuple(e)
    if not g.has_edge(u, v):
        raise GraphError(f"no edge {u!r}-{v!r}")
    adj, labs, cols = g._copy_parts()
    adj[u].discard(v)
    adj[v].discard(u)
    cols.pop(e, None)
    return Graph._from_parts(adj, labs, cols, g.name, g._next_id)


# -- tiny isomorphism helper (tests only scale) --------------------------------


def edge_multiset_isomorphic(va: list, ea: list[tuple], vb: list, eb: list[tuple]) -> bool:
    """Brute-force isomorphism of two multigraphs given as vertex/edge lists.

    Loops are pairs ``(x, x)``.  Intended for graphs with at most ~8 vertices.
    """
    from collections import Counter
    from itertools import permutations

    if len(va) != len(vb) or len(ea) != len(eb):
        return False

    def key(x, y):
        return (x, y) if repr(x) <= repr(y) else (y, x)

    def degs(vs, es):
        d = Counter({v: 0 for v in vs})
        for x, y in es:
            d[x] += 1
            d[y] += 1
        return d

    da, db = degs(va, ea), degs(vb, eb)
    if sorted(da.values()) != sorted(db.values()):
        return False
    target = Counter(key(x, y) for x, y in eb)
    for perm in permutations(vb):
        m = dict(zip(va, perm))
        if any(da[v] != db[m[v]] for v in va):
            continue
        if Counter(key(m[x], m[y]) for x, y in ea) == target:
            return True
    return False


def is_isomorphic(a: Graph, b: Graph) -> bool:
    """Label-forgetting isomorphism test for small simple graphs."""
    return edge_multiset_isomorphic(
        list(a.vertices), [tuple(e) for e in a.edges], list(b.vertices), [tuple(e) for e in b.edges]
    )
