"""Exact backtracking oracles and witness checkers.

All searches prune with the same monotone fact: once the edges chosen so far
disconnect the rest of the graph, no extension can repair it.  Budgets count
search nodes; running out raises :class:`BudgetExceeded`, which callers must
not confuse with a NO answer.
"""

from __future__ import annotations

import os
from collections import deque
from itertools import combinations
from typing import Mapping

from . import embed
from .graph import Graph, Vertex, components, edge, is_connected, is_spanning_tree, is_tree
from .sat import BudgetExceeded
from .witness import CycleWitness, PartitionWitness, PathWitness, Witness

DEFAULT_BUDGET = 5_000_000
BRUTE_FORCE_CUT_MAX_VERTICES = 16


def default_budget() -> int:
    return int(os.environ.get("PLANARPACK_BUDGET", DEFAULT_BUDGET))


class _Counter:
    __slots__ = ("left",)

    def __init__(self, budget: int | None):
        self.left = default_budget() if budget is None else budget

    def tick(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise BudgetExceeded("search budget exhausted")


class _Indexed:
    """Integer view of a graph: adjacency lists of (neighbor, edge id)."""

    def __init__(self, g: Graph):
        self.verts = list(g.vertices)
        self.vid = {v: i for i, v in enumerate(self.verts)}
        self.pairs = [tuple(self.vid[x] for x in p) for p in g.edge_pairs()]
        self.adj: list[list[tuple[int, int]]] = [[] for _ in self.verts]
        for k, (a, b) in enumerate(self.pairs):
            self.adj[a].append((b, k))
            self.adj[b].append((a, k))
        self.deg = [len(a) for a in self.adj]

    def connected_without(self, removed: list[bool]) -> bool:
        n = len(self.verts)
        seen = [False] * n
        seen[0] = True
        stack = [0]
        count = 1
        adj = self.adj
        while stack:
            x = stack.pop()
            for y, k in adj[x]:
                if not seen[y] and not removed[k]:
                    seen[y] = True
                    count += 1
                    stack.append(y)
        return count == n

    def edge_set(self, ids) -> frozenset:
        return frozenset(edge(self.verts[self.pairs[k][0]], self.verts[self.pairs[k][1]]) for k in ids)


class _Removal:
    """A growing stack of removed edge groups that must leave the graph connected.

    On a connected plane graph an edge set is disconnecting exactly when its
    dual edges contain a cycle, so planar inputs get a rollback union-find over
    faces.  Anything else falls back to a full search per push.
    """

    def __init__(self, ix: _Indexed, g: Graph):
        self.ix = ix
        rot = embed.find_planar_embedding(g) if ix.pairs else None
        if rot is None:
            self.faces = None
            self.removed = [False] * len(ix.pairs)
            return
        d = embed.dual(g, rot)
        self.faces = d.edges
        self.parent = list(range(d.num_vertices))
        self.size = [1] * d.num_vertices
        self.history: list[int] = []

    def _find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            x = parent[x]
        return x

    def _rollback(self, count: int) -> None:
        parent, size, history = self.parent, self.size, self.history
        for _ in range(count):
            small = history.pop()
            size[parent[small]] -= size[small]
            parent[small] = small

    def push(self, ids) -> bool:
        """Remove ``ids`` if the rest stays connected; otherwise change nothing."""
        if self.faces is None:
            for k in ids:
                self.removed[k] = True
            if self.ix.connected_without(self.removed):
                return True
            for k in ids:
                self.removed[k] = False
            return False
        done = 0
        for k in ids:
            a, b = self.faces[k]
            ra, rb = self._find(a), self._find(b)
            if ra == rb:
                self._rollback(done)
                return False
            if self.size[ra] < self.size[rb]:
                ra, rb = rb, ra
            self.parent[rb] = ra
            self.size[ra] += self.size[rb]
            self.history.append(rb)
            done += 1
        return True

    def pop(self, ids) -> None:
        if self.faces is None:
            for k in ids:
                self.removed[k] = False
        else:
            self._rollback(len(ids))

    def probe(self, ids) -> bool:
        if self.push(ids):
            self.pop(ids)
            return True
        return False


def _chains(ix: _Indexed, alive: list[bool], branch: list[bool]):
    """Maximal paths of the alive subgraph between branch vertices.

    Returns ``(chains, loose)``: chains are ``(a, b, edge ids, interior)``
    and ``loose`` lists alive cycles containing no branch vertex.
    """
    used = [False] * len(ix.pairs)
    chains = []
    for a in range(len(ix.verts)):
        if not branch[a]:
            continue
        for y, k in ix.adj[a]:
            if used[k] or not alive[y]:
                continue
            ids, interior = [k], []
            used[k] = True
            prev, cur = a, y
            while not branch[cur]:
                interior.append(cur)
                nxt = [(z, kk) for z, kk in ix.adj[cur] if alive[z] and kk != ids[-1]]
                (z, kk), = nxt
                used[kk] = True
                ids.append(kk)
                prev, cur = cur, z
            chains.append((a, cur, ids, interior))
    loose = []
    for k, (a, b) in enumerate(ix.pairs):
        if used[k] or not (alive[a] and alive[b]):
            continue
        ids = [k]
        used[k] = True
        prev, cur = a, b
        while cur != a:
            (z, kk), = [(z, kk) for z, kk in ix.adj[cur] if alive[z] and kk != ids[-1]]
            used[kk] = True
            ids.append(kk)
            prev, cur = cur, z
        loose.append(ids)
    return chains, loose


def _core(ix: _Indexed, alive: list[bool], keep=()) -> list[int]:
    """Peel alive vertices of alive-degree < 2 (except ``keep``); returns alive degrees."""
    deg = [sum(1 for y, _ in ix.adj[x] if alive[y]) if alive[x] else 0 for x in range(len(alive))]
    queue = deque(x for x in range(len(alive)) if alive[x] and deg[x] < 2 and x not in keep)
    while queue:
        x = queue.popleft()
        if not alive[x]:
            continue
        alive[x] = False
        for y, _ in ix.adj[x]:
            if alive[y]:
                deg[y] -= 1
                if deg[y] < 2 and y not in keep:
                    queue.append(y)
    return [sum(1 for y, _ in ix.adj[x] if alive[y]) if alive[x] else 0 for x in range(len(alive))]


# -- nonseparating cycles ---------------------------------------------------------


def find_nonseparating_cycle(g: Graph, budget: int | None = None) -> CycleWitness | None:
    """A cycle whose removal leaves ``g`` connected, or ``None``."""
    if len(g) < 3 or not is_connected(g):
        return None
    ix = _Indexed(g)
    n = len(ix.verts)
    counter = _Counter(budget)
    alive = [d >= 3 for d in ix.deg]
    cdeg = _core(ix, alive)
    branch = [alive[x] and cdeg[x] >= 3 for x in range(n)]
    chains, loose = _chains(ix, alive, branch)
    removal = _Removal(ix, g)

    def try_edges(ids) -> bool:
        counter.tick()
        return removal.probe(ids)

    at: list[list[int]] = [[] for _ in range(n)]
    for c, (a, b, _, _) in enumerate(chains):
        at[a].append(c)
        if b != a:
            at[b].append(c)
    order = sorted((x for x in range(n) if branch[x]), key=lambda x: (-ix.deg[x], x))
    rank = {x: r for r, x in enumerate(order)}
    dist_cache: dict[int, list[int]] = {}

    def distances(root: int) -> list[int]:
        if root not in dist_cache:
            inf = len(ix.pairs) + 1
            dist = [inf] * n
            dist[root] = 0
            q = deque([root])
            while q:
                x = q.popleft()
                for y, _ in ix.adj[x]:
                    if alive[y] and dist[y] == inf:
                        dist[y] = dist[x] + 1
                        q.append(y)
            dist_cache[root] = dist
        return dist_cache[root]

    # iterative deepening on length, so the witness is a shortest one; each
    # round raises the limit to the smallest length bound the last one cut off
    limit = 3
    inf = len(ix.pairs) + 1
    while True:
        nxt = inf
        for ids in loose:
            if len(ids) == limit and try_edges(ids):
                return CycleWitness(ix.edge_set(ids))
            if len(ids) > limit:
                nxt = min(nxt, len(ids))
        for root in order:
            r0 = rank[root]
            dist = distances(root)
            visited = [False] * n
            visited[root] = True
            used_chain = [False] * len(chains)
            stack_ids: list[int] = []

            def dfs(x: int) -> list[int] | None:
                nonlocal nxt
                for c in at[x]:
                    if used_chain[c]:
                        continue
                    a, b, ids, _ = chains[c]
                    y = b if a == x else a
                    length = len(stack_ids) + len(ids)
                    if y == root:
                        if (len(stack_ids) == 0 and a != b) or length < limit:
                            continue
                        if length > limit:
                            nxt = min(nxt, length)
                            continue
                        if try_edges(ids):
                            return stack_ids + ids
                        continue
                    if visited[y] or rank[y] < r0:
                        continue
                    if length + dist[y] > limit:
                        nxt = min(nxt, length + dist[y])
                        continue
                    counter.tick()
                    if removal.push(ids):
                        visited[y] = True
                        used_chain[c] = True
                        stack_ids.extend(ids)
                        found = dfs(y)
                        if found is not None:
                            return found
                        del stack_ids[len(stack_ids) - len(ids) :]
                        used_chain[c] = False
                        visited[y] = False
                        removal.pop(ids)
                return None

            found = dfs(root)
            if found is not None:
                return CycleWitness(ix.edge_set(found))
        if nxt == inf:
            return None
        limit = nxt


# -- nonseparating s-t paths --------------------------------------------------------


def find_nonseparating_st_path(
    g: Graph, s: Vertex, t: Vertex, budget: int | None = None
) -> PathWitness | None:
    """A simple s-t path whose removal leaves ``g`` connected, or ``None``."""
    if s == t:
        raise ValueError("s and t must differ")
    if s not in g or t not in g:
        raise ValueError("s and t must be vertices of the graph")
    if not is_connected(g):
        return None
    ix = _Indexed(g)
    n = len(ix.verts)
    si, ti = ix.vid[s], ix.vid[t]
    counter = _Counter(budget)
    alive = [d >= 3 for d in ix.deg]
    alive[si] = alive[ti] = True
    cdeg = _core(ix, alive, keep=(si, ti))
    if not (alive[si] and alive[ti]):
        return None
    branch = [alive[x] and (cdeg[x] >= 3 or x in (si, ti)) for x in range(n)]
    chains, _ = _chains(ix, alive, branch)
    at: list[list[int]] = [[] for _ in range(n)]
    for c, (a, b, _, _) in enumerate(chains):
        if a == b:
            continue
        at[a].append(c)
        at[b].append(c)
    removal = _Removal(ix, g)
    visited = [False] * n
    visited[si] = True
    trail: list[int] = [si]

    def dfs(x: int) -> bool:
        for c in at[x]:
            a, b, ids, interior = chains[c]
            y = b if a == x else a
            if visited[y]:
                continue
            counter.tick()
            if removal.push(ids):
                inner = interior if a == x else interior[::-1]
                trail.extend(inner)
                trail.append(y)
                if y == ti:
                    return True
                visited[y] = True
                if dfs(y):
                    return True
                visited[y] = False
                del trail[len(trail) - len(inner) - 1 :]
                removal.pop(ids)
        return False

    if dfs(si):
        return PathWitness(tuple(ix.verts[x] for x in trail))
    return None


# -- tree + spanning tree partitions --------------------------------------------------


def _short_cycle(ix: _Indexed) -> list[int] | None:
    """Edge ids of a shortest cycle (BFS from every vertex)."""
    best = None
    for r in range(len(ix.verts)):
        dist = {r: 0}
        via = {r: None}
        q = deque([r])
        while q:
            x = q.popleft()
            for y, k in ix.adj[x]:
                if k == via[x]:
                    continue
                if y not in dist:
                    dist[y] = dist[x] + 1
                    via[y] = k
                    q.append(y)
                else:
                    length = dist[x] + dist[y] + 1
                    if best is None or length < len(best):
                        best = _close(ix, via, x, y, k)
    return best


def _close(ix, via, x, y, k) -> list[int]:
    def up(z):
        out = []
        while via[z] is not None:
            e = via[z]
            out.append((z, e))
            a, b = ix.pairs[e]
            z = a if b == z else b
        return out, z

    ex = [e for _, e in up(x)[0]]
    ey = [e for _, e in up(y)[0]]
    # trim the shared stretch near the root
    while ex and ey and ex[-1] == ey[-1]:
        ex.pop()
        ey.pop()
    return ex + [k] + ey[::-1]


class _PartitionSearch:
    """Grow the tree part edge by edge with propagation.

    ``state[k]`` is 0 (undecided), 1 (tree part) or 2 (spanning tree part).
    Two rules run to a fixpoint at every node: a bridge of ``G - T`` cannot
    join the tree, and an undecided edge closing a cycle among edges that can
    no longer join the tree must join it.
    """

    def __init__(self, ix: _Indexed, need: int, counter: _Counter):
        self.ix = ix
        self.need = need
        self.counter = counter
        n, m = len(ix.verts), len(ix.pairs)
        self.state = [0] * m
        self.removed = [False] * m
        self.in_tree = [False] * n
        self.size = 0
        self.trail: list[tuple] = []
        self.last_bridges: list[int] = []

    # trail-recorded moves
    def include(self, k: int) -> None:
        a, b = self.ix.pairs[k]
        new = [x for x in (a, b) if not self.in_tree[x]]
        self.state[k] = 1
        self.removed[k] = True
        for x in new:
            self.in_tree[x] = True
        self.size += 1
        self.trail.append((k, new))

    def exclude(self, k: int) -> None:
        self.state[k] = 2
        self.trail.append((k, None))

    def undo(self, mark: int) -> None:
        while len(self.trail) > mark:
            k, new = self.trail.pop()
            if new is not None:
                self.removed[k] = False
                for x in new:
                    self.in_tree[x] = False
                self.size -= 1
            self.state[k] = 0

    def bridges(self) -> list[int] | None:
        """Bridges of ``G - T``, or ``None`` when it is disconnected."""
        ix, removed = self.ix, self.removed
        n = len(ix.verts)
        disc = [-1] * n
        low = [0] * n
        out = []
        disc[0] = low[0] = 0
        clock = 1
        stack = [(0, -1, iter(ix.adj[0]))]
        while stack:
            x, via, it = stack[-1]
            advanced = False
            for y, k in it:
                if removed[k] or k == via:
                    continue
                if disc[y] < 0:
                    disc[y] = low[y] = clock
                    clock += 1
                    stack.append((y, k, iter(ix.adj[y])))
                    advanced = True
                    break
                low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[x])
                if low[x] > disc[p]:
                    out.append(via)
        if clock < n:
            return None
        return out

    def propagate(self, known: list[int] | None = None) -> bool:
        """Run both rules to a fixpoint; ``known`` are the bridges of the current ``G - T``."""
        ix, state, in_tree = self.ix, self.state, self.in_tree
        n = len(ix.verts)
        br = known
        while True:
            if self.size > self.need:
                return False
            if br is None:
                br = self.bridges()
            if br is None:
                return False
            self.last_bridges = br
            for k in br:
                if state[k] == 0:
                    self.exclude(k)
            # vertices the tree could still take in; a degree-2 vertex can only
            # be a leaf (using both its edges would cut it off), so the search
            # does not pass through it
            reach = in_tree[:]
            grows = in_tree[:]
            stack = [x for x in range(n) if in_tree[x]]
            deg = ix.deg
            while stack:
                x = stack.pop()
                for y, k in ix.adj[x]:
                    if state[k] == 0 and not reach[y]:
                        reach[y] = True
                        if deg[y] >= 3:
                            grows[y] = True
                            stack.append(y)
            if sum(reach) - 1 < self.need:
                return False
            parent = list(range(n))

            def find(z):
                while parent[z] != z:
                    parent[z] = parent[parent[z]]
                    z = parent[z]
                return z

            open_edges = []
            for k, (a, b) in enumerate(ix.pairs):
                st = state[k]
                if st == 1:
                    continue
                if st == 0 and not (in_tree[a] and in_tree[b]) and (grows[a] or grows[b]):
                    open_edges.append(k)
                    continue
                ra, rb = find(a), find(b)
                if ra == rb:
                    return False
                parent[ra] = rb
            required = [k for k in open_edges if find(ix.pairs[k][0]) == find(ix.pairs[k][1])]
            if self.size + len(required) > self.need:
                return False
            grow = [k for k in required if in_tree[ix.pairs[k][0]] or in_tree[ix.pairs[k][1]]]
            if not grow:
                return True
            self.include(grow[0])
            br = None

    def frontier(self) -> int | None:
        """First frontier edge, preferring edges whose new vertex has degree >= 3."""
        deg, in_tree, state = self.ix.deg, self.in_tree, self.state
        fallback = None
        for k, (a, b) in enumerate(self.ix.pairs):
            if state[k] == 0 and in_tree[a] != in_tree[b]:
                if fallback is None:
                    fallback = k
        return fallback

    def twin(self, k: int) -> int | None:
        """The other edge at a degree-2 vertex whose neighbors are both in the tree.

        Hanging that vertex off either neighbor gives the same remaining problem,
        so once one choice fails the other can be discarded.
        """
        a, b = self.ix.pairs[k]
        w = b if self.in_tree[a] else a
        if self.ix.deg[w] != 2:
            return None
        for y, kk in self.ix.adj[w]:
            if kk != k and self.in_tree[y] and self.state[kk] == 0:
                return kk
        return None

    def search(self, known: list[int] | None = None) -> bool:
        self.counter.tick()
        if not self.propagate(known):
            return False
        if self.size == self.need:
            return True
        k = self.frontier()
        if k is None:
            return False
        bridges = self.last_bridges
        mark = len(self.trail)
        self.include(k)
        if self.search():
            return True
        self.undo(mark)
        # excluding an edge leaves G - T unchanged
        self.exclude(k)
        twin = self.twin(k)
        if twin is not None:
            self.exclude(twin)
        if self.search(bridges):
            return True
        self.undo(mark)
        return False


def find_tree_spanning_tree_partition(
    g: Graph, budget: int | None = None
) -> PartitionWitness | None:
    """Split ``E(g)`` into a tree and a spanning tree, or return ``None``.

    The tree part may be empty exactly when ``g`` is itself a tree.  The tree
    part has to meet every cycle, so the search roots it at each edge of one
    short cycle in turn (excluding the earlier roots) and grows it from there.
    """
    if len(g) == 0 or not is_connected(g):
        return None
    ix = _Indexed(g)
    n, m = len(ix.verts), len(ix.pairs)
    need = m - n + 1
    if need == 0:
        return PartitionWitness(frozenset(), frozenset(g.edges))
    counter = _Counter(budget)
    cyc = _short_cycle(ix)
    search = _PartitionSearch(ix, need, counter)
    for idx, root in enumerate(cyc):
        mark = len(search.trail)
        for k in cyc[:idx]:
            search.exclude(k)
        search.include(root)
        if search.search():
            tree = [k for k in range(m) if search.state[k] == 1]
            rest = [k for k in range(m) if search.state[k] != 1]
            return PartitionWitness(ix.edge_set(tree), ix.edge_set(rest))
        search.undo(mark)
    return None


# -- acyclic cuts ------------------------------------------------------------------------


def is_acyclic_cut(g: Graph, cut) -> bool:
    """True iff ``cut`` is the crossing set of a nontrivial bipartition and is a forest."""
    cut = g.check_edges(cut)
    if not cut:
        return False
    comps = components(g, cut)
    if len(comps) < 2:
        return False
    where = {v: i for i, comp in enumerate(comps) for v in comp}
    # the cut must be exactly the edges between two unions of components
    side = {}
    for c in range(len(comps)):
        side.setdefault(c, None)
    adj: dict = {c: set() for c in range(len(comps))}
    for e in cut:
        x, y = (where[v] for v in e)
        if x == y:
            return False
        adj[x].add(y)
        adj[y].add(x)
    for c in adj:
        if side[c] is not None:
            continue
        side[c] = 0
        stack = [c]
        while stack:
            x = stack.pop()
            for y in adj[x]:
                if side[y] is None:
                    side[y] = 1 - side[x]
                    stack.append(y)
                elif side[y] == side[x]:
                    return False
    return _forest(cut)


def _forest(es) -> bool:
    parent: dict = {}

    def find(z):
        parent.setdefault(z, z)
        while parent[z] != z:
            parent[z] = parent[parent[z]]
            z = parent[z]
        return z

    for e in es:
        a, b = (find(x) for x in e)
        if a == b:
            return False
        parent[a] = b
    return True


def find_acyclic_cut_bruteforce(g: Graph) -> frozenset | None:
    """Enumerate vertex bipartitions; return the first acyclic crossing set."""
    if len(g) > BRUTE_FORCE_CUT_MAX_VERTICES:
        raise BudgetExceeded(f"brute-force cut search is limited to {BRUTE_FORCE_CUT_MAX_VERTICES} vertices")
    vs = list(g.vertices)
    if len(vs) < 2:
        return None
    pairs = g.edge_pairs()
    rest = vs[1:]
    for mask in range(0, 1 << len(rest)):
        side = {vs[0]}
        side.update(v for bit, v in enumerate(rest) if mask >> bit & 1)
        if len(side) == len(vs):
            continue
        cut = [edge(a, b) for a, b in pairs if (a in side) != (b in side)]
        if cut and _forest(cut):
            return frozenset(cut)
    return None


def find_multigraph_nonseparating_cycle(
    num_vertices: int, edges: list[tuple[int, int]], budget: int | None = None
) -> list[int] | None:
    """Nonseparating cycle in a multigraph; loops and parallel pairs count as cycles."""
    counter = _Counter(budget)
    if num_vertices == 0:
        return None
    adj: list[list[tuple[int, int]]] = [[] for _ in range(num_vertices)]
    for k, (a, b) in enumerate(edges):
        adj[a].append((b, k))
        if a != b:
            adj[b].append((a, k))
    removed = [False] * len(edges)

    def connected() -> bool:
        seen = [False] * num_vertices
        seen[0] = True
        stack = [0]
        cnt = 1
        while stack:
            x = stack.pop()
            for y, k in adj[x]:
                if not removed[k] and not seen[y]:
                    seen[y] = True
                    cnt += 1
                    stack.append(y)
        return cnt == num_vertices

    if not connected():
        return None
    for k, (a, b) in enumerate(edges):
        if a == b:
            return [k]
    deg = [0] * num_vertices
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    ok_vertex = [num_vertices == 1 or d >= 3 for d in deg]

    for root in range(num_vertices):
        if not ok_vertex[root]:
            continue
        visited = [False] * num_vertices
        visited[root] = True
        trail: list[int] = []

        def dfs(x: int) -> list[int] | None:
            for y, k in adj[x]:
                if removed[k] or not ok_vertex[y]:
                    continue
                counter.tick()
                if y == root:
                    if trail and k == trail[-1]:
                        continue
                    removed[k] = True
                    good = connected()
                    removed[k] = False
                    if good:
                        return trail + [k]
                    continue
                if visited[y] or y < root:
                    continue
                removed[k] = True
                if connected():
                    visited[y] = True
                    trail.append(k)
                    got = dfs(y)
                    if got is not None:
                        return got
                    trail.pop()
                    visited[y] = False
                removed[k] = False
            return None

        got = dfs(root)
        if got is not None:
            return got
    return None


def find_acyclic_cut(g: Graph, rot: Mapping, budget: int | None = None) -> frozenset | None:
    """Acyclic cut of ``g`` via a nonseparating cycle of its planar dual."""
    d = embed.dual(g, rot)
    found = find_multigraph_nonseparating_cycle(d.num_vertices, d.edges, budget)
    if found is None:
        return None
    return frozenset(d.primal_edges[k] for k in found)


# -- witness checking ----------------------------------------------------------------


def _separation_note(g: Graph, removed) -> str | None:
    comps = components(g, removed)
    if len(comps) == 1:
        return None
    comps.sort(key=len, reverse=True)
    cut_off = sorted((v for comp in comps[1:] for v in comp), key=str)
    noun = "vertex" if len(cut_off) == 1 else "vertices"
    return f"removal disconnects the graph: {noun} {', '.join(map(str, cut_off))} separated"


def _simple_cycle_problem(g: Graph, es) -> str | None:
    if len(es) < 3:
        return "not a simple cycle: fewer than three edges"
    deg: dict = {}
    for e in es:
        for v in e:
            deg[v] = deg.get(v, 0) + 1
    bad = [v for v, d in deg.items() if d != 2]
    if bad:
        return f"not a simple cycle: vertex {bad[0]} has degree {deg[bad[0]]}"
    sub = Graph(deg, (tuple(e) for e in es))
    if not is_connected(sub):
        return "not a simple cycle: edges form several cycles"
    return None


def check_witness(
    g: Graph, w: Witness, problem: str, s: Vertex | None = None, t: Vertex | None = None
) -> tuple[bool, str]:
    """Validate shape and predicate of ``w``; the string names the first failure."""
    try:
        if problem == "cycle":
            if not isinstance(w, CycleWitness):
                return False, "expected a cycle witness"
            es = g.check_edges(w.edges)
            why = _simple_cycle_problem(g, es) or _separation_note(g, es)
        elif problem == "stpath":
            if not isinstance(w, PathWitness):
                return False, "expected a path witness"
            vs = w.vertices
            if s is None or t is None or s == t:
                return False, "s and t must be given and distinct"
            if len(vs) < 2 or vs[0] != s or vs[-1] != t:
                return False, "path does not run from s to t"
            if len(set(vs)) != len(vs):
                return False, "path repeats a vertex"
            es = g.check_edges(w.edges)
            why = _separation_note(g, es)
        elif problem == "partition":
            if not isinstance(w, PartitionWitness):
                return False, "expected a partition witness"
            tree = g.check_edges(w.tree)
            span = g.check_edges(w.spanning_tree)
            if tree & span:
                why = "parts share an edge"
            elif (tree | span) != set(g.edges):
                why = "parts do not cover the edge set"
            elif not is_spanning_tree(g, span):
                why = "second part is not a spanning tree"
            elif tree and not is_tree(g, tree):
                why = "first part is not a tree"
            else:
                why = None
        else:
            return False, f"unknown problem {problem!r}"
    except ValueError as exc:
        return False, str(exc)
    return (why is None), (why or "ok")


def find_witness(inst_graph: Graph, problem: str, s=None, t=None, budget: int | None = None):
    if problem == "cycle":
        return find_nonseparating_cycle(inst_graph, budget)
    if problem == "stpath":
        return find_nonseparating_st_path(inst_graph, s, t, budget)
    if problem == "partition":
        return find_tree_spanning_tree_partition(inst_graph, budget)
    raise ValueError(f"unknown problem {problem!r}")
