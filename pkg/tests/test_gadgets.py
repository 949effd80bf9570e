from __future__ import annotations

from collections import Counter
from itertools import product

import networkx as nx
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from planarpack import embed, gadgets
from planarpack.gadgets import CYCLE, PARTITION, STPATH
from planarpack.graph import MINUS, PLUS, edge, is_connected_after_removal, is_spanning_tree, is_tree
from planarpack.harness import phi0, unit_pair, zero_clause
from planarpack.sat import associated_graph, evaluate, normalize, satisfying_assignments
from planarpack.solvers import check_witness, find_witness
from planarpack.witness import CycleWitness, PathWitness, WitnessError

from test_sat import cnfs


def build(phi, problem):
    rot = embed.find_planar_embedding(associated_graph(phi))
    return gadgets.reduce(phi, rot, problem)


def planar(phi):
    assume(embed.find_planar_embedding(associated_graph(phi)) is not None)
    return phi


def closed_form(phi, problem):
    """Vertex and edge totals counted by hand from the gadget drawing."""
    v, e = phi.n + phi.m, 0
    for i in range(1, phi.n + 1):
        b = sum(1 for c in phi.clauses for lit in c if abs(lit) == i)
        k = max(1, 2 * b)
        v += 10 * k + 3 + 2 * b
        e += 14 * k + 6 + 3 * b
    if problem != CYCLE:
        v += 1
    if problem == PARTITION:
        v, e = v + 4, e + 6
    return v, e


def kinds(inst):
    return Counter(inst.graph.label(w).kind for w in inst.graph)


@pytest.mark.parametrize("problem", gadgets.PROBLEMS)
def test_fixture_instance_shape(problem):
    inst = build(phi0(), problem)
    assert gadgets.check_instance(inst) == []
    c = kinds(inst)
    assert c["B"] == 4 and c["A"] == 4
    assert inst.k == {1: 4, 2: 4, 3: 1}
    assert inst.graph.max_degree() == 4
    assert (len(inst.graph), inst.graph.num_edges) == closed_form(phi0(), problem)


def test_path_colors():
    inst = build(phi0(), CYCLE)
    for i in (1, 2, 3):
        assert {inst.graph.color(e) for e in inst.path_edges(i, PLUS)} == {PLUS}
        assert {inst.graph.color(e) for e in inst.path_edges(i, MINUS)} == {MINUS}


def test_open_instances_designate_ends():
    inst = build(phi0(), STPATH)
    assert inst.graph.label(inst.s).kind == "S" and inst.graph.label(inst.t).kind == "T"
    assert not inst.graph.has_edge(inst.s, inst.t)
    part = build(phi0(), PARTITION)
    g = part.graph
    for kind in ("SPrime", "SDoublePrime"):
        assert g.has_edge(part.s, g.find(kind))
    assert g.has_edge(g.find("SPrime"), g.find("SDoublePrime"))


def test_zero_clause_instance_has_no_connectors():
    inst = build(zero_clause(), CYCLE)
    c = kinds(inst)
    assert c["B"] == 0 and c["A"] == 0 and c["Clause"] == 0
    assert gadgets.check_instance(inst) == []


def test_rejects_foreign_embedding():
    rot = embed.find_planar_embedding(associated_graph(phi0()))
    with pytest.raises(ValueError):
        gadgets.reduce(unit_pair(), rot, CYCLE)


def test_forward_cycle_picks_opposite_paths():
    inst = build(phi0(), CYCLE)
    w = gadgets.forward_witness_cycle(inst, (1, -1, 1))
    want = inst.path_edges(1, MINUS) | inst.path_edges(2, PLUS) | inst.path_edges(3, MINUS)
    assert w.edges == want
    assert is_connected_after_removal(inst.graph, w.edges)
    with pytest.raises(WitnessError):
        gadgets.forward_witness_cycle(inst, (1, 1, 1))


def test_forward_zero_clause_all_plus():
    inst = build(zero_clause(), CYCLE)
    w = gadgets.forward_witness_cycle(inst, (1, 1, 1))
    assert w.edges == frozenset().union(*(inst.path_edges(i, MINUS) for i in (1, 2, 3)))


def test_forward_path_on_open_instance():
    inst = build(phi0(), STPATH)
    w = gadgets.forward_witness_cycle(inst, (1, -1, 1))
    assert isinstance(w, PathWitness)
    assert w.vertices[0] == inst.s and w.vertices[-1] == inst.t
    assert check_witness(inst.graph, w, STPATH, inst.s, inst.t)[0]


@pytest.mark.parametrize("problem", [CYCLE, STPATH])
def test_round_trip_every_assignment(problem):
    inst = build(phi0(), problem)
    for f in satisfying_assignments(phi0()):
        w = gadgets.forward_witness_cycle(inst, f)
        assert gadgets.backward_witness(inst, w) == f


@pytest.mark.parametrize("problem", [CYCLE, STPATH])
def test_oracle_witness_decodes_to_model(problem):
    inst = build(phi0(), problem)
    w = find_witness(inst.graph, problem, inst.s, inst.t)
    assert evaluate(phi0(), gadgets.backward_witness(inst, w))


def test_backward_rejects_connector_cycle():
    inst = build(phi0(), CYCLE)
    g = inst.graph
    omega = g.find("Omega", 1, 0)
    h = nx.Graph([tuple(e) for e in g.edges])
    a, b = sorted(g.neighbors(omega), key=str)
    h.remove_node(omega)
    path = nx.shortest_path(h, a, b)
    cyc = [omega, *path]
    es = frozenset(edge(x, y) for x, y in zip(cyc, cyc[1:] + cyc[:1]))
    with pytest.raises(WitnessError):
        gadgets.backward_witness(inst, CycleWitness(es))


def test_partition_builder_fixture():
    inst = build(phi0(), PARTITION)
    w = gadgets.forward_witness_partition(inst, (1, -1, 1))
    assert is_tree(inst.graph, w.tree) and is_spanning_tree(inst.graph, w.spanning_tree)
    assert w.tree | w.spanning_tree == frozenset(inst.graph.edges)
    assert len(w.tree) == inst.graph.num_edges - len(inst.graph) + 1


def test_partition_builder_zero_clauses():
    inst = build(zero_clause(), PARTITION)
    g = inst.graph
    f = (1, -1, 1)
    w = gadgets.forward_witness_partition(inst, f)
    want = frozenset().union(*(inst.path_edges(i, -f[i - 1]) for i in (1, 2, 3)))
    want |= {edge(inst.s, g.find("SDoublePrime")), edge(inst.t, g.find("TDoublePrime"))}
    assert w.tree == want
    assert check_witness(g, w, PARTITION)[0]


def test_placement_keeps_blocks_distinct():
    phi = normalize([[1, 2], [1, -2], [-1, 3], [1, -3]], 3)
    inst = build(phi, PARTITION)
    blocks = [blk for (i, _), (_, blk) in inst.amap.items() if i == 1]
    assert len(blocks) == 4 and len(set(blocks)) == 4
    assert gadgets.check_instance(inst) == []


@settings(max_examples=30, deadline=None)
@given(cnfs(max_n=4, max_m=4), st.sampled_from(gadgets.PROBLEMS))
def test_random_instances_satisfy_invariants(phi, problem):
    planar(phi)
    inst = build(phi, problem)
    assert gadgets.check_instance(inst) == []
    assert (len(inst.graph), inst.graph.num_edges) == closed_form(phi, problem)


@settings(max_examples=25, deadline=None)
@given(cnfs(max_n=4, max_m=4))
def test_random_forward_witnesses_validate(phi):
    planar(phi)
    sols = satisfying_assignments(phi)
    if not sols:
        return
    f = sols[-1]
    for problem in gadgets.PROBLEMS:
        inst = build(phi, problem)
        if problem == PARTITION:
            w = gadgets.forward_witness_partition(inst, f)
        else:
            w = gadgets.forward_witness_cycle(inst, f)
            assert gadgets.backward_witness(inst, w) == f
        assert check_witness(inst.graph, w, problem, inst.s, inst.t)[0]


def test_every_assignment_of_small_formula_is_refused_or_valid():
    phi = normalize([[1, -2], [2, 3]], 3)
    inst = build(phi, CYCLE)
    for f in product((1, -1), repeat=3):
        if evaluate(phi, f):
            assert check_witness(inst.graph, gadgets.forward_witness_cycle(inst, f), CYCLE)[0]
        else:
            with pytest.raises(WitnessError):
                gadgets.forward_witness_cycle(inst, f)
