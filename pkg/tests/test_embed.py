from __future__ import annotations

import functools

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planarpack import embed
from planarpack.embed import EmbeddingError
from planarpack.graph import Graph, edge, is_connected
from planarpack.harness import fig2_fixture, phi0
from planarpack.sat import associated_graph

from naive import connected_atlas, to_nx


def triangle():
    return Graph("abc", [("a", "b"), ("b", "c"), ("c", "a")])


def k4():
    return Graph("abcd", [tuple(p) for p in ("ab", "ac", "ad", "bc", "bd", "cd")])


# ccw rotation of K4 drawn as triangle abc with d in the middle
K4_ROT = {"a": ("b", "d", "c"), "b": ("c", "d", "a"), "c": ("a", "d", "b"), "d": ("a", "b", "c")}


def test_face_counts():
    fs = embed.faces(triangle(), {"a": ("b", "c"), "b": ("c", "a"), "c": ("a", "b")})
    assert sorted(map(len, fs)) == [3, 3]
    fs = embed.faces(k4(), K4_ROT)
    assert sorted(map(len, fs)) == [3, 3, 3, 3]
    path = Graph("abc", [("a", "b"), ("b", "c")])
    assert [len(f) for f in embed.faces(path, {"a": ("b",), "b": ("a", "c"), "c": ("b",)})] == [4]


def test_every_dart_in_exactly_one_face():
    g = fig2_fixture()
    rot = embed.find_planar_embedding(g)
    darts = [d for f in embed.faces(g, rot) for d in f]
    assert len(darts) == len(set(darts)) == 2 * g.num_edges


def test_genus_check_detects_swapped_rotation():
    assert embed.check_planar_embedding(k4(), K4_ROT)
    bad = dict(K4_ROT, d=("a", "c", "b"))
    assert len(embed.faces(k4(), bad)) == 2
    assert not embed.check_planar_embedding(k4(), bad)


def test_rotation_must_match_neighbors():
    with pytest.raises(EmbeddingError):
        embed.validate_rotation(triangle(), {"a": ("b",), "b": ("c", "a"), "c": ("a", "b")})


def test_find_embedding():
    assert embed.check_planar_embedding(k4(), embed.find_planar_embedding(k4()))
    k5 = Graph(range(5), [(i, j) for i in range(5) for j in range(i + 1, 5)])
    assert embed.find_planar_embedding(k5) is None
    assert embed.find_planar_embedding(k5, method="exhaustive") is None
    g = associated_graph(phi0())
    assert embed.check_planar_embedding(g, embed.find_planar_embedding(g, method="exhaustive"))


def test_exhaustive_refuses_large_graphs():
    cyc = Graph(range(13), [(i, (i + 1) % 13) for i in range(13)])
    with pytest.raises(EmbeddingError, match="embedding required"):
        embed.find_planar_embedding(cyc, method="exhaustive")


def test_methods_agree_on_small_graphs():
    for g in connected_atlas(5):
        lr = embed.find_planar_embedding(g)
        ex = embed.find_planar_embedding(g, method="exhaustive")
        assert (lr is None) == (ex is None) == (not nx.check_planarity(to_nx(g))[0])


def test_dual_examples():
    d = embed.dual(triangle(), {"a": ("b", "c"), "b": ("c", "a"), "c": ("a", "b")})
    assert d.num_vertices == 2 and len(d.edges) == 3 and all(a != b for a, b in d.edges)
    single = Graph("uv", [("u", "v")])
    d = embed.dual(single, {"u": ("v",), "v": ("u",)})
    assert d.num_vertices == 1 and d.edges == [(0, 0)]
    d = embed.dual(k4(), K4_ROT)
    assert d.num_vertices == 4 and d.num_edges == 6
    degs = [0] * 4
    for a, b in d.edges:
        degs[a] += 1
        degs[b] += 1
    assert degs == [3, 3, 3, 3]


def test_dual_rejects_nonplanar_rotation():
    with pytest.raises(EmbeddingError):
        embed.dual(k4(), dict(K4_ROT, d=("a", "c", "b")))


def test_double_dual_restores_rotation():
    g = fig2_fixture()
    rot = embed.find_planar_embedding(g)
    primal = embed.as_multigraph(g, rot)
    again = embed.dual(g, rot).dual()
    assert again.sigma == primal.sigma and again.is_planar()


@functools.cache
def _planar_graphs():
    return [g for g in connected_atlas(6) if nx.check_planarity(to_nx(g))[0] and len(g) > 1]


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_rewrites_preserve_planarity(data):
    g = data.draw(st.sampled_from(_planar_graphs()))
    rot = embed.find_planar_embedding(g)
    for _ in range(data.draw(st.integers(1, 4))):
        if not g.edges:
            break
        e = data.draw(st.sampled_from(g.edges))
        op = data.draw(st.sampled_from(["subdivide", "contract", "delete"]))
        u, v = tuple(e)
        if op == "subdivide":
            g, rot, _ = embed.subdivide(g, rot, e)
        elif op == "contract" and not (g.neighbors(u) & g.neighbors(v)):
            g, rot, _ = embed.contract(g, rot, e)
        elif op == "delete":
            h, r2 = embed.delete_edge(g, rot, e)
            if not is_connected(h):
                continue
            g, rot = h, r2
        embed.validate_rotation(g, rot)
        assert embed.check_planar_embedding(g, rot)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_euler_formula_on_found_embeddings(data):
    g = data.draw(st.sampled_from(_planar_graphs()))
    rot = embed.find_planar_embedding(g)
    assert len(g) - g.num_edges + len(embed.faces(g, rot)) == 2
    d = embed.dual(g, rot)
    assert d.num_vertices == len(embed.faces(g, rot)) and d.num_edges == g.num_edges
    assert d.primal_edges == [edge(*p) for p in g.edge_pairs()]
