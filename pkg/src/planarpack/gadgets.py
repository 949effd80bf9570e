"""Planar SAT reductions to the three spanning-tree packing/partition problems.

Each variable x_i of a planar CNF is replaced by a *ladder*: two colored
paths P_i^+ (the ``v`` path) and P_i^- (the ``u`` path) that cross each
other at every index j = 2 (mod 4), decorated with degree-2 connectors
(omega at j = 0 mod 4, sigma and tau at each crossing) that force any
nonseparating cycle to run along exactly one of the two paths.  Every clause
occurrence becomes a pendant ``clause - beta - a`` where ``a`` subdivides a
ladder edge of the occurrence's sign.

The rotation system is carried through every rewrite.  Inside a ladder the
rotations are read off a fixed drawing (see :func:`_ladder_layout`): the
source ``s`` sits at the origin, the sink ``t`` at ``(4k+2, 0)`` and ladder
index ``j`` at abscissa ``j + 1``.  Clause edges that left x_i on the arc
from the ``t`` side counterclockwise to the ``s`` side attach to the upper
boundary of the ladder, the others to the lower boundary.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

from . import embed
from .embed import EmbeddingError, Rotation
from .graph import (
    MINUS,
    NEUTRAL,
    PLUS,
    Edge,
    Graph,
    Vertex,
    VertexLabel,
    edge,
    is_spanning_tree,
    is_tree,
)
from .sat import PlanarCnf, associated_graph, clause_id, evaluate, var_id
from .witness import CycleWitness, PartitionWitness, PathWitness, Witness, WitnessError

CYCLE = "cycle"
STPATH = "stpath"
PARTITION = "partition"
PROBLEMS = (CYCLE, STPATH, PARTITION)


def L(kind: str, *idx: int) -> VertexLabel:
    return VertexLabel(kind, tuple(idx))


def ladder_size(b: int) -> int:
    """Ladder parameter k for a variable with ``b`` clause occurrences."""
    return max(1, 2 * b)


def side_color(block: int, side: int) -> int:
    """Color of the ladder path on the ``side`` (+1 upper, -1 lower) of a block."""
    u_up = block % 2 == 0
    on_u = (side == 1) == u_up
    return MINUS if on_u else PLUS


def block_edge(block: int) -> tuple[int, int]:
    """Ladder indices of the edge that hosts an ``a`` vertex in ``block``."""
    return (0, 1) if block == 0 else (4 * block - 1, 4 * block)


def place_occurrences(upper: list[int], lower: list[int], k: int) -> list[tuple[int, int, int]]:
    """Assign a distinct block to each occurrence.

    ``upper`` and ``lower`` are the colors of the occurrences on each side,
    both listed left to right.  Returns ``(side, position, block)`` triples.
    """
    out = []
    ptr = 0
    for side, colors in ((1, upper), (-1, lower)):
        for pos, color in enumerate(colors):
            b = ptr if side_color(ptr, side) == color else ptr + 1
            if b > k or side_color(b, side) != color:
                raise AssertionError("ladder too short for the occurrences at this variable")
            out.append((side, pos, b))
            ptr = b + 1
    return out


@dataclass
class ReducedInstance:
    graph: Graph
    rotation: Rotation
    problem: str
    phi: PlanarCnf
    k: dict[int, int]
    s: Vertex | None = None
    t: Vertex | None = None
    amap: dict[tuple[int, int], tuple[Vertex, int]] = field(default_factory=dict)

    @cached_property
    def _index(self) -> dict:
        return self.graph.label_index()

    def vertex(self, kind: str, *idx: int) -> Vertex:
        return self._index[L(kind, *idx)]

    def ends(self, i: int) -> tuple[Vertex, Vertex]:
        n = self.phi.n
        if self.problem == CYCLE:
            return self.vertex("Y", n if i == 1 else i - 1), self.vertex("Y", i)
        start = self.vertex("S") if i == 1 else self.vertex("Y", i - 1)
        end = self.vertex("T") if i == n else self.vertex("Y", i)
        return start, end

    def path(self, i: int, sign: int) -> tuple:
        """Vertex sequence of P_i^sign from its start to its end."""
        cache = self.__dict__.setdefault("_paths", {})
        if (i, sign) in cache:
            return cache[(i, sign)]
        g = self.graph
        start, end = self.ends(i)
        core = [start]
        for j in range(4 * self.k[i] + 1):
            core.append(self.vertex("Cross", i, j) if j % 4 == 2 else self.vertex("PathV", i, sign, j))
        core.append(end)
        seq = [core[0]]
        for p, q in zip(core, core[1:]):
            if not g.has_edge(p, q):
                mids = [
                    w
                    for w in g.neighbors(p) & g.neighbors(q)
                    if (lab := g.label(w)) is not None and lab.kind == "A" and lab.idx[0] == i
                ]
                if len(mids) != 1:
                    raise WitnessError(f"ladder of variable {i} is broken between {p!r} and {q!r}")
                seq.append(mids[0])
            seq.append(q)
        cache[(i, sign)] = tuple(seq)
        return cache[(i, sign)]

    def path_edges(self, i: int, sign: int) -> frozenset:
        seq = self.path(i, sign)
        return frozenset(edge(a, b) for a, b in zip(seq, seq[1:]))


# -- construction -------------------------------------------------------------------


def _check_input(phi: PlanarCnf, emb: Rotation) -> Graph:
    if any(len(c) == 0 for c in phi.clauses):
        raise ValueError("empty clause: the associated graph is disconnected")
    g0 = associated_graph(phi)
    try:
        embed.validate_rotation(g0, emb)
    except EmbeddingError as exc:
        raise EmbeddingError(f"not an embedding of the associated graph: {exc}") from None
    if not embed.check_planar_embedding(g0, emb):
        raise EmbeddingError("embedding of the associated graph is not planar")
    return g0


def _angle_order(center: tuple[float, float], nbrs: dict) -> tuple:
    cx, cy = center
    return tuple(sorted(nbrs, key=lambda w: math.atan2(nbrs[w][1] - cy, nbrs[w][0] - cx)))


def _ladder_layout(k: int):
    """Positions of ladder index ``j`` on the ``u`` and ``v`` paths."""

    def yu(j: int) -> int:
        return 1 if ((j + 2) // 4) % 2 == 0 else -1

    def upos(j):
        return (j + 1, 0 if j % 4 == 2 else yu(j))

    def vpos(j):
        return (j + 1, 0 if j % 4 == 2 else -yu(j))

    return yu, upos, vpos


def _install_gadget(g: Graph, rot: Rotation, phi: PlanarCnf, i: int, s: Vertex, t: Vertex):
    """Replace variable vertex x_i by its ladder; returns (g, rot, k, amap entries)."""
    xi = var_id(phi, i)
    order = rot[xi]
    p = order.index(t)
    cyc = order[p:] + order[:p]
    q = cyc.index(s)
    upper_ccw, lower_ccw = list(cyc[1:q]), list(cyc[q + 1 :])

    beta = {}
    for c in upper_ccw + lower_ccw:
        j = g.label(c).idx[0]
        g, rot, b = embed.subdivide(g, rot, edge(xi, c), L("B", i, j))
        beta[c] = b
    g, rot = embed.delete_vertex(g, rot, xi)

    k = ladder_size(len(beta))
    upper = list(reversed(upper_ccw))
    lower = lower_ccw
    placement = place_occurrences(
        [g.color(edge(beta[c], c)) for c in upper],
        [g.color(edge(beta[c], c)) for c in lower],
        k,
    )

    nid = g.fresh_id()
    new: list = []
    labels: dict = {}

    def alloc(label: VertexLabel) -> int:
        nonlocal nid
        v = nid
        nid += 1
        new.append(v)
        labels[v] = label
        return v

    u, v = {}, {}
    for j in range(4 * k + 1):
        if j % 4 == 2:
            u[j] = v[j] = alloc(L("Cross", i, j))
        else:
            u[j] = alloc(L("PathV", i, MINUS, j))
            v[j] = alloc(L("PathV", i, PLUS, j))
    omega, sigma, tau = {}, {}, {}
    for j in range(4 * k + 1):
        if j % 4 == 0:
            omega[j] = alloc(L("Omega", i, j))
        elif j % 4 == 2:
            sigma[j] = alloc(L("Sigma", i, j))
            tau[j] = alloc(L("Tau", i, j))
    a_of = {}
    for side, idx, blk in placement:
        c = (upper if side == 1 else lower)[idx]
        j = g.label(c).idx[0]
        a_of[c] = (alloc(L("A", i, j)), side, blk)

    yu, upos, vpos = _ladder_layout(k)
    pos = {s: (0, 0), t: (4 * k + 2, 0)}
    for j in range(4 * k + 1):
        pos[u[j]] = upos(j)
        pos[v[j]] = vpos(j)
    for j, w in omega.items():
        pos[w] = (j + 1, 0)
    for j in sigma:
        pos[sigma[j]] = (j + 1, yu(j - 1))
        pos[tau[j]] = (j + 1, -yu(j - 1))

    # split each host edge of an a vertex
    hosts = {}
    for c, (a, side, blk) in a_of.items():
        j1, j2 = block_edge(blk)
        path = u if side_color(blk, side) == MINUS else v
        hosts[(path is u, j1)] = a
        x1, y1 = pos[path[j1]]
        pos[a] = (x1 + 0.5, y1)
        pos[beta[c]] = (x1 + 0.5, 2 * y1)

    edges, colors = [], {}

    def add_path(seq, color):
        for p1, p2 in zip(seq, seq[1:]):
            edges.append((p1, p2))
            colors[edge(p1, p2)] = color

    for path, color in ((u, MINUS), (v, PLUS)):
        seq = [s]
        for j in range(4 * k + 1):
            seq.append(path[j])
            if (path is u, j) in hosts:
                seq.append(hosts[(path is u, j)])
        seq.append(t)
        add_path(seq, color)
    for j, w in omega.items():
        add_path([u[j], w, v[j]], NEUTRAL)
    for j in sigma:
        add_path([u[j - 1], sigma[j], v[j + 1]], NEUTRAL)
        add_path([v[j - 1], tau[j], u[j + 1]], NEUTRAL)
    for c, (a, _, _) in a_of.items():
        add_path([a, beta[c]], NEUTRAL)

    (t_prev,) = rot[s]
    (s_next,) = rot[t]
    g = g.extend(new, edges, labels, colors)
    far = {t_prev: (-1, 0), s_next: (4 * k + 3, 0)}
    adj: dict = {}
    for p1, p2 in edges:
        adj.setdefault(p1, []).append(p2)
        adj.setdefault(p2, []).append(p1)
    rot = dict(rot)
    for w, nbrs in adj.items():
        if w in beta.values():
            rot[w] = tuple(g.neighbors(w))
            continue
        where = {x: pos[x] if x in pos else far[x] for x in g.neighbors(w)}
        rot[w] = _angle_order(pos[w], where)

    amap = {}
    for c, (a, _, blk) in a_of.items():
        amap[(i, g.label(c).idx[0])] = (a, blk)
    return g, rot, k, amap


def _reduce(phi: PlanarCnf, emb: Rotation, problem: str) -> ReducedInstance:
    if problem not in PROBLEMS:
        raise ValueError(f"unknown problem {problem!r}")
    g = _check_input(phi, emb)
    rot: Rotation = {v: tuple(emb[v]) for v in g}
    n = phi.n
    open_ends = problem != CYCLE

    t_of, s_of = {}, {}
    for i in range(1, n + 1):
        nxt = i % n + 1
        a, b = var_id(phi, i), var_id(phi, nxt)
        tl = L("T") if open_ends and i == n else L("Tv", i)
        sl = L("S") if open_ends and nxt == 1 else L("Sv", nxt)
        g, rot, t_of[i] = embed.subdivide(g, rot, edge(a, b), tl)
        g, rot, s_of[nxt] = embed.subdivide(g, rot, edge(t_of[i], b), sl)

    ks, amap = {}, {}
    for i in range(1, n + 1):
        g, rot, ks[i], part = _install_gadget(g, rot, phi, i, s_of[i], t_of[i])
        amap.update(part)

    last = n if problem == CYCLE else n - 1
    for i in range(1, last + 1):
        g, rot, _ = embed.contract(g, rot, edge(t_of[i], s_of[i % n + 1]), L("Y", i), first=t_of[i])

    s = t = None
    if open_ends:
        s, t = s_of[1], t_of[n]
        before_s, before_t = rot[s], rot[t]
        g, rot = embed.delete_edge(g, rot, edge(t, s))
    if problem == PARTITION:
        nid = g.fresh_id()
        sp, spp, tp, tpp = nid, nid + 1, nid + 2, nid + 3
        labels = {
            sp: L("SPrime"),
            spp: L("SDoublePrime"),
            tp: L("TPrime"),
            tpp: L("TDoublePrime"),
        }
        tri = [(s, sp), (sp, spp), (spp, s), (t, tp), (tp, tpp), (tpp, t)]
        g = g.extend([sp, spp, tp, tpp], tri, labels)
        rot[s] = _splice(before_s, t, (sp, spp))
        rot[t] = _splice(before_t, s, (tp, tpp))
        rot[sp], rot[spp] = (s, spp), (sp, s)
        rot[tp], rot[tpp] = (t, tpp), (tp, t)

    g.name = f"H_{problem}"
    return ReducedInstance(g, rot, problem, phi, ks, s, t, amap)


def _splice(order: tuple, old, repl: tuple) -> tuple:
    out: list = []
    for x in order:
        out.extend(repl if x == old else (x,))
    return tuple(out)


def reduce_to_cycle_packing(phi: PlanarCnf, emb: Rotation) -> ReducedInstance:
    """Graph with a nonseparating cycle iff ``phi`` is satisfiable."""
    return _reduce(phi, emb, CYCLE)


def reduce_to_path_packing(phi: PlanarCnf, emb: Rotation) -> ReducedInstance:
    """Graph with a nonseparating s-t path iff ``phi`` is satisfiable."""
    return _reduce(phi, emb, STPATH)


def reduce_to_tree_partition(phi: PlanarCnf, emb: Rotation) -> ReducedInstance:
    """Graph whose edges split into a tree and a spanning tree iff ``phi`` is satisfiable."""
    return _reduce(phi, emb, PARTITION)


def reduce(phi: PlanarCnf, emb: Rotation, problem: str) -> ReducedInstance:
    return _reduce(phi, emb, problem)


# -- closed-form size and structural invariants ------------------------------------


def expected_size(phi: PlanarCnf, problem: str) -> tuple[int, int]:
    """(|V|, |E|) of the reduced instance, counted from the construction."""
    nv, ne = phi.n + phi.m, 0
    for i in range(1, phi.n + 1):
        b = len(phi.occurrences(i))
        k = ladder_size(b)
        path_vertices = 2 * (4 * k + 1) - k
        connectors = (k + 1) + 2 * k
        nv += path_vertices + connectors + 2 * b
        ne += 2 * (4 * k + 2) + 2 * (k + 1) + 4 * k + 3 * b
    if problem in (STPATH, PARTITION):
        nv += 1
    if problem == PARTITION:
        nv += 4
        ne += 6
    return nv, ne


def check_instance(inst: ReducedInstance) -> list[str]:
    """Every violated structural invariant, as human-readable strings."""
    g, phi = inst.graph, inst.phi
    bad = []
    if not embed.check_planar_embedding(g, inst.rotation):
        bad.append("embedding fails the Euler check")
    if (len(g), g.num_edges) != expected_size(phi, inst.problem):
        bad.append(f"size {(len(g), g.num_edges)} != formula {expected_size(phi, inst.problem)}")
    for i in range(1, phi.n + 1):
        for sign in (PLUS, MINUS):
            if any(g.color(e) != sign for e in inst.path_edges(i, sign)):
                bad.append(f"P_{i}^{sign:+d} has an edge of the wrong color")
    sizes = {j: len(c) for j, c in enumerate(phi.clauses, start=1)}
    deg2 = set()
    for w in g:
        lab = g.label(w)
        d = g.degree(w)
        kind = lab.kind if lab else None
        if kind in ("B", "Omega", "Sigma", "Tau", "SPrime", "SDoublePrime", "TPrime", "TDoublePrime"):
            deg2.add(w)
            if d != 2:
                bad.append(f"{lab} has degree {d}, expected 2")
        elif kind == "Clause":
            if d != sizes[lab.idx[0]]:
                bad.append(f"{lab} has degree {d}, expected {sizes[lab.idx[0]]}")
            if d == 2:
                deg2.add(w)
        elif kind in ("Y", "Cross") and d != 4:
            bad.append(f"{lab} has degree {d}, expected 4")
        elif kind in ("S", "T"):
            want = 4 if inst.problem == PARTITION else 2
            if d != want:
                bad.append(f"{lab} has degree {d}, expected {want}")
            if d == 2:
                deg2.add(w)
    actual2 = {w for w in g if g.degree(w) == 2}
    if actual2 != deg2:
        bad.append(f"unexpected degree-2 vertices {sorted(map(str, actual2 ^ deg2))}")
    if all(len(c) <= 3 for c in phi.clauses) and g.max_degree() != 4:
        bad.append(f"max degree {g.max_degree()} != 4")
    blocks: dict[int, list[int]] = {}
    for (i, _), (_, blk) in inst.amap.items():
        blocks.setdefault(i, []).append(blk)
    for i, bl in blocks.items():
        if len(bl) != len(set(bl)):
            bad.append(f"a vertices of variable {i} share a small face")
    return bad


# -- witness translation -----------------------------------------------------------


def forward_witness_cycle(inst: ReducedInstance, f) -> Witness:
    """Union of the paths P_i^{-f(x_i)}: a cycle, or an s-t path on open instances."""
    f = tuple(f)
    if not evaluate(inst.phi, f):
        raise WitnessError("assignment does not satisfy the expression")
    n = inst.phi.n
    if inst.problem == CYCLE:
        es = frozenset().union(*(inst.path_edges(i, -f[i - 1]) for i in range(1, n + 1)))
        return CycleWitness(es)
    seq: list = [inst.s]
    for i in range(1, n + 1):
        seq.extend(inst.path(i, -f[i - 1])[1:])
    return PathWitness(tuple(seq))


def _chosen_paths(inst: ReducedInstance, es: frozenset, endpoints=()) -> tuple:
    g = inst.graph
    for e in es:
        for w in e:
            if w not in endpoints and g.degree(w) == 2:
                raise WitnessError(f"witness passes through degree-2 vertex {w!r} ({g.label(w)})")
    f = []
    chosen: set = set()
    for i in range(1, inst.phi.n + 1):
        plus = inst.path_edges(i, PLUS) <= es
        minus = inst.path_edges(i, MINUS) <= es
        if plus == minus:
            raise WitnessError(f"witness does not follow exactly one ladder path of variable {i}")
        r = PLUS if plus else MINUS
        chosen |= inst.path_edges(i, r)
        f.append(-r)
    if chosen != set(es):
        raise WitnessError("witness is not a union of ladder paths")
    return tuple(f)


def _tree_path(edges, a, b) -> list | None:
    adj: dict = {}
    for e in edges:
        x, y = tuple(e)
        adj.setdefault(x, []).append(y)
        adj.setdefault(y, []).append(x)
    if a not in adj or b not in adj:
        return None
    prev = {a: None}
    stack = [a]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in prev:
                prev[y] = x
                stack.append(y)
    if b not in prev:
        return None
    out = [b]
    while out[-1] != a:
        out.append(prev[out[-1]])
    return out[::-1]


def backward_witness(inst: ReducedInstance, w: Witness) -> tuple:
    """Read the satisfying assignment off a nonseparating witness."""
    from .solvers import check_witness

    ok, why = check_witness(inst.graph, w, inst.problem, inst.s, inst.t)
    if not ok:
        raise WitnessError(f"not a valid witness: {why}")
    if isinstance(w, CycleWitness):
        return _chosen_paths(inst, w.edges)
    if isinstance(w, PathWitness):
        return _chosen_paths(inst, w.edges, endpoints=(inst.s, inst.t))
    if isinstance(w, PartitionWitness):
        seq = _tree_path(w.tree, inst.s, inst.t)
        if seq is None:
            raise WitnessError("tree part does not join s and t")
        es = frozenset(edge(a, b) for a, b in zip(seq, seq[1:]))
        return _chosen_paths(inst, es, endpoints=(inst.s, inst.t))
    raise WitnessError(f"unsupported witness {type(w).__name__}")


def forward_witness_partition(inst: ReducedInstance, f) -> PartitionWitness:
    """Build the (tree, spanning tree) split from a satisfying assignment."""
    if inst.problem != PARTITION:
        raise ValueError("partition witnesses need a tree-partition instance")
    f = tuple(f)
    phi, g = inst.phi, inst.graph
    if not evaluate(phi, f):
        raise WitnessError("assignment does not satisfy the expression")
    n = phi.n
    qplus: set = set()
    qminus: set = set()
    for i in range(1, n + 1):
        qplus |= inst.path_edges(i, f[i - 1])
        qminus |= inst.path_edges(i, -f[i - 1])
    for w in g:
        lab = g.label(w)
        if lab is not None and lab.kind in ("Omega", "Sigma", "Tau"):
            qplus |= {edge(w, x) for x in g.neighbors(w)}

    def span(es):
        out = set()
        for e in es:
            out |= e
        return out

    for j, clause in enumerate(phi.clauses, start=1):
        cj = clause_vertex(inst, j)
        avs = []
        for lit in sorted(clause, key=abs):
            i = abs(lit)
            avs.append((i, inst.amap[(i, j)][0], inst.vertex("B", i, j)))
        vplus = span(qplus)
        on_plus = [(i, a, b) for i, a, b in avs if a in vplus]
        on_minus = [(i, a, b) for i, a, b in avs if a not in vplus]
        if not on_plus:
            raise AssertionError(f"clause {j} has no literal on the kept paths")
        _, a0, b0 = on_plus[0]
        qplus |= {edge(a0, b0), edge(b0, cj)}
        for _, a, b in on_plus[1:]:
            route = _tree_path(qplus, a, cj)
            vminus = span(qminus)
            hit = None
            for x, y in zip(route, route[1:]):
                if x in vminus or y in vminus:
                    hit = edge(x, y)
                    break
            if hit is None or len(hit & vminus) != 1:
                raise AssertionError(f"no repair edge for clause {j}")
            qplus.discard(hit)
            qminus.add(hit)
            qplus |= {edge(a, b), edge(b, cj)}
        for _, a, b in on_minus:
            qplus |= {edge(a, b), edge(b, cj)}

    sp, spp = inst.vertex("SPrime"), inst.vertex("SDoublePrime")
    tp, tpp = inst.vertex("TPrime"), inst.vertex("TDoublePrime")
    qplus |= {edge(inst.s, sp), edge(sp, spp), edge(inst.t, tp), edge(tp, tpp)}
    qminus |= {edge(inst.s, spp), edge(inst.t, tpp)}

    w = PartitionWitness(frozenset(qminus), frozenset(qplus))
    if qplus & qminus or (qplus | qminus) != set(g.edges):
        raise AssertionError("parts do not partition the edge set")
    if not is_tree(g, qminus) or not is_spanning_tree(g, qplus):
        raise AssertionError("constructed parts are not a tree and a spanning tree")
    return w


def clause_vertex(inst: ReducedInstance, j: int) -> Vertex:
    v = inst.vertex("Clause", j)
    assert v == clause_id(inst.phi, j)
    return v


__all__ = [
    "CYCLE",
    "PARTITION",
    "PROBLEMS",
    "STPATH",
    "Edge",
    "ReducedInstance",
    "backward_witness",
    "check_instance",
    "expected_size",
    "forward_witness_cycle",
    "forward_witness_partition",
    "place_occurrences",
    "reduce",
    "reduce_to_cycle_packing",
    "reduce_to_path_packing",
    "reduce_to_tree_partition",
]
