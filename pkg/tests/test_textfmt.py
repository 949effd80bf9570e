from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planarpack import embed, gadgets, textfmt
from planarpack.graph import PLUS, Graph, edge
from planarpack.harness import fig2_fixture, phi0
from planarpack.sat import associated_graph
from planarpack.textfmt import FormatError


def test_embedded_graph_round_trip():
    g = fig2_fixture()
    rot = embed.find_planar_embedding(g)
    text = textfmt.format_embedded_graph(g, rot)
    h, rot2 = textfmt.parse_embedded_graph(text)
    assert set(h.edges) == set(g.edges) and rot2 == rot
    assert textfmt.format_embedded_graph(h, rot2) == text


def test_integer_ids_come_back_as_ints():
    g = Graph([0, 1], [(0, 1)], colors={edge(0, 1): PLUS})
    h, rot = textfmt.parse_embedded_graph(textfmt.format_embedded_graph(g))
    assert rot is None and set(h.vertices) == {0, 1} and h.color(edge(0, 1)) == PLUS


def test_comments_and_blank_lines():
    text = "# header\n\ngraph tiny\nv a\nv b  # trailing\ne a b\n"
    assert textfmt.parse(text).graph.num_edges == 1


@pytest.mark.parametrize(
    "text, needle",
    [
        ("v a\nq b\n", "unknown record"),
        ("v a\nv b\ne a b color=x\n", "bad edge attribute"),
        ("v a\nrot a b\n", "needs"),
        ("v\n", "line 1"),
        ("v a\nv b x=1\n", "unknown vertex attribute"),
    ],
)
def test_parse_errors(text, needle):
    with pytest.raises(FormatError, match=needle):
        textfmt.parse(text)


def test_ids_with_spaces_are_refused():
    with pytest.raises(FormatError):
        textfmt.format_graph(Graph(["a b", "c"], [("a b", "c")]))


@pytest.mark.parametrize("problem", gadgets.PROBLEMS)
def test_instance_round_trip(problem):
    phi = phi0()
    inst = gadgets.reduce(phi, embed.find_planar_embedding(associated_graph(phi)), problem)
    text = textfmt.format_instance(inst)
    back = textfmt.parse_instance(text)
    assert back.phi == phi and back.problem == problem
    assert (back.s, back.t, back.k, back.amap) == (inst.s, inst.t, inst.k, inst.amap)
    assert back.rotation == inst.rotation
    assert {(e, back.graph.color(e)) for e in back.graph.edges} == {
        (e, inst.graph.color(e)) for e in inst.graph.edges
    }
    assert textfmt.format_instance(back) == text
    assert gadgets.check_instance(back) == []


def test_instance_needs_problem_and_rotation():
    with pytest.raises(FormatError, match="problem"):
        textfmt.parse_instance("v a\nrot a:\n")
    with pytest.raises(FormatError, match="rotation"):
        textfmt.parse_instance("v a\nmeta problem cycle\n")
    with pytest.raises(FormatError, match="meta key"):
        textfmt.parse_instance("v a\nmeta colour red\n")


def test_dot_export():
    phi = phi0()
    inst = gadgets.reduce(phi, embed.find_planar_embedding(associated_graph(phi)), "stpath")
    dot = textfmt.to_dot(inst.graph, inst.s, inst.t)
    assert dot.startswith("graph ") and dot.rstrip().endswith("}")
    assert dot.count("doublecircle") == 2
    assert "color=blue" in dot and "color=red" in dot
    assert dot.count(" -- ") == inst.graph.num_edges


def test_dot_escapes_quotes():
    g = Graph(['a"b', "c"], [('a"b', "c")])
    assert 'a\\"b' in textfmt.to_dot(g)


@settings(max_examples=50, deadline=None)
@given(st.lists(st.tuples(st.integers(0, 7), st.integers(0, 7)), max_size=15))
def test_random_graph_round_trip(pairs):
    es = {edge(a, b) for a, b in pairs if a != b}
    g = Graph(range(8), [tuple(e) for e in es])
    h = textfmt.parse(textfmt.format_embedded_graph(g)).graph
    assert set(h.vertices) == set(g.vertices) and set(h.edges) == es
