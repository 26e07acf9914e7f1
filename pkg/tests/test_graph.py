"""Graph surgery, families, canonical keys, and the edge-list format."""

import random

import networkx as nx
import pytest

from booleancomplex import (
    CanonicalKeyLimitError,
    FamilyError,
    FamilySpec,
    Graph,
    GraphError,
    InvalidEdgeError,
    UnknownVertexError,
    complete_graph,
    cycle_graph,
    edgeless_graph,
    family_graph,
    format_edge_list,
    parse_edge_list,
    path_graph,
    star_graph,
)
from helpers import (
    all_labeled_graphs,
    iso_classes,
    random_graph,
    random_permutation_relabel,
    to_networkx,
)


def edge_set(graph):
    return {frozenset(e) for e in graph.edges}


# ----------------------------------------------------------------------
# basics

def test_construction_and_views():
    g = Graph(edges=[(0, 2), (2, 1)], vertices=[5])
    assert g.vertices == (0, 1, 2, 5)
    assert edge_set(g) == {frozenset({0, 2}), frozenset({1, 2})}
    assert g.degree(2) == 2 and g.degree(5) == 0
    assert g.neighbors(2) == (0, 1)
    assert g.adjacent(0, 2) and not g.adjacent(0, 1)
    assert g.isolated_vertices() == (5,)
    assert len(g) == 4


def test_rejects_bad_input():
    with pytest.raises(InvalidEdgeError):
        Graph(edges=[(1, 1)])
    with pytest.raises(GraphError):
        Graph(vertices=[-1])
    with pytest.raises(GraphError):
        Graph(vertices=[64])
    with pytest.raises(UnknownVertexError):
        path_graph(3).degree(9)


def test_parallel_edges_collapse():
    g = Graph(edges=[(0, 1), (1, 0), (0, 1)])
    assert g.edges == [(0, 1)]


# ----------------------------------------------------------------------
# the three edge operations plus vertex deletion

def test_delete_edge_examples():
    a3 = Graph(edges=[(1, 2), (2, 3)])
    assert edge_set(a3.delete_edge((1, 2))) == {frozenset({2, 3})}
    assert a3.delete_edge((1, 2)).vertices == (1, 2, 3)

    a2 = Graph(edges=[(1, 2)])
    assert a2.delete_edge((1, 2)).edges == []
    assert len(a2.delete_edge((1, 2))) == 2

    k3 = Graph(edges=[(1, 2), (1, 3), (2, 3)])
    assert edge_set(k3.delete_edge((1, 2))) == {frozenset({1, 3}), frozenset({2, 3})}


def test_delete_edge_rejects_non_edges():
    a3 = path_graph(3)
    with pytest.raises(InvalidEdgeError):
        a3.delete_edge((0, 2))


def test_contract_edge_examples():
    k3 = Graph(edges=[(1, 2), (1, 3), (2, 3)])
    c = k3.contract_edge((1, 2))
    assert c.vertices == (1, 3) and edge_set(c) == {frozenset({1, 3})}

    a3 = Graph(edges=[(1, 2), (2, 3)])
    c = a3.contract_edge((1, 2))  # merged vertex keeps the smaller label
    assert c.vertices == (1, 3) and edge_set(c) == {frozenset({1, 3})}

    a2 = Graph(edges=[(1, 2)])
    assert len(a2.contract_edge((1, 2))) == 1


def test_contract_is_simple_and_drops_one_vertex():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng, rng.randint(2, 7))
        if not g.edges:
            continue
        e = rng.choice(g.edges)
        c = g.contract_edge(e)
        assert len(c) == len(g) - 1
        assert min(e) in c and max(e) not in c
        for u, v in c.edges:
            assert u != v and c.adjacent(v, u)


def test_extract_edge_examples():
    a3 = Graph(edges=[(1, 2), (2, 3)])
    assert a3.extract_edge((1, 2)).vertices == (3,)

    a2 = Graph(edges=[(1, 2)])
    assert len(a2.extract_edge((1, 2))) == 0

    k4 = complete_graph(4)
    ex = k4.extract_edge((0, 1))
    assert ex.vertices == (2, 3) and edge_set(ex) == {frozenset({2, 3})}


def test_delete_vertex_examples():
    k3 = complete_graph(3)
    assert edge_set(k3.delete_vertex(0)) == {frozenset({1, 2})}
    assert len(Graph(vertices=[0]).delete_vertex(0)) == 0
    s4 = star_graph(4)
    assert s4.delete_vertex(0).edges == []
    assert len(s4.delete_vertex(0)) == 3


def test_extract_equals_double_vertex_deletion():
    rng = random.Random(11)
    for _ in range(50):
        g = random_graph(rng, rng.randint(2, 7))
        if not g.edges:
            continue
        s, t = rng.choice(g.edges)
        assert g.extract_edge((s, t)) == g.delete_vertex(s).delete_vertex(t)


def test_delete_then_readd_recovers():
    rng = random.Random(3)
    for _ in range(50):
        g = random_graph(rng, rng.randint(2, 7))
        if not g.edges:
            continue
        e = rng.choice(g.edges)
        assert g.delete_edge(e).add_edge(e) == g


# ----------------------------------------------------------------------
# components

def test_components_examples():
    g = Graph(edges=[(0, 1)], vertices=[2])  # A2 plus a point
    comps = g.components()
    assert [c.vertices for c in comps] == [(0, 1), (2,)]

    assert len(complete_graph(3).components()) == 1
    assert [c.vertices for c in edgeless_graph(3).components()] == [(0,), (1,), (2,)]


def test_components_match_networkx():
    rng = random.Random(5)
    for _ in range(30):
        g = random_graph(rng, rng.randint(1, 8), p=0.25)
        ours = [set(c.vertices) for c in g.components()]
        theirs = sorted(
            (set(c) for c in nx.connected_components(to_networkx(g))), key=min
        )
        assert ours == theirs


# ----------------------------------------------------------------------
# canonical keys

def test_canonical_key_relabel_examples():
    assert path_graph(3).canonical_key() == Graph(edges=[(7, 5), (5, 9)]).canonical_key()
    assert complete_graph(3).canonical_key() != path_graph(3).canonical_key()
    assert edgeless_graph(2).canonical_key() != path_graph(2).canonical_key()


def test_canonical_key_invariant_under_relabeling():
    rng = random.Random(23)
    for _ in range(120):
        g = random_graph(rng, rng.randint(1, 7))
        assert g.canonical_key() == random_permutation_relabel(rng, g).canonical_key()


def test_canonical_key_separates_all_small_classes():
    classes = iso_classes(5)
    assert len(classes) == 1 + 2 + 4 + 11 + 34  # classes on 1..5 vertices
    keys = [g.canonical_key() for g in classes]
    assert len(set(keys)) == len(keys)
    for a, b in zip(classes, classes[1:]):  # spot-check keys against VF2
        if len(a) == len(b):
            assert not nx.is_isomorphic(to_networkx(a), to_networkx(b))


def test_canonical_key_agrees_with_vf2_on_regular_graphs():
    # refinement-resistant inputs: cycles, complete graphs, Petersen
    pet = Graph(edges=list(nx.petersen_graph().edges()))
    rng = random.Random(31)
    for g in [cycle_graph(6), cycle_graph(9), complete_graph(8), pet]:
        assert g.canonical_key() == random_permutation_relabel(rng, g).canonical_key()
    assert cycle_graph(6).canonical_key() != Graph(
        edges=[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]
    ).canonical_key()  # C6 vs two triangles, both 2-regular


def test_canonical_key_size_limit():
    with pytest.raises(CanonicalKeyLimitError):
        path_graph(11).canonical_key()
    assert path_graph(11).canonical_key(limit=11)


# ----------------------------------------------------------------------
# families

def test_family_paths_and_forks():
    a4 = family_graph("A:4")
    assert len(a4) == 4 and edge_set(a4) == {frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3})}
    # A_n and B_n share one unlabeled graph
    for n in range(2, 9):
        assert family_graph(f"A:{n}").canonical_key() == family_graph(f"B:{n}").canonical_key()
    d4 = family_graph("D:4")
    assert d4.canonical_key() == star_graph(4).canonical_key()
    assert family_graph("affineA:3").canonical_key() == cycle_graph(4).canonical_key()
    assert family_graph("affineA:1").canonical_key() == path_graph(2).canonical_key()
    assert len(family_graph("affineE:8")) == 9
    assert family_graph("K:4") == complete_graph(4)
    assert family_graph("delta:3") == edgeless_graph(3)


def test_family_spec_parsing_and_ranges():
    assert FamilySpec.parse("affined:6") == FamilySpec("affineD", 6)
    assert FamilySpec.parse("f4") == FamilySpec("F4", None)
    with pytest.raises(FamilyError):
        FamilySpec.parse("Z:3")
    with pytest.raises(FamilyError):
        family_graph("E:5")
    with pytest.raises(FamilyError):
        family_graph("cycle:2")
    with pytest.raises(FamilyError):
        family_graph("A")  # needs a rank
    with pytest.raises(FamilyError):
        family_graph("S:1")


# ----------------------------------------------------------------------
# edge-list text

def test_parse_edge_list_round_trip():
    text = """
    # a triangle and an isolated vertex
    0 1
    1 2
    2 0
    7
    """
    g, labels = parse_edge_list(text)
    assert labels == (0, 1, 2, 7)
    assert g.vertices == (0, 1, 2, 3)  # external 7 densified to 3
    assert g.isolated_vertices() == (3,)
    again, labels2 = parse_edge_list(format_edge_list(g))
    assert again == g and labels2 == g.vertices


def test_parse_edge_list_errors():
    with pytest.raises(GraphError):
        parse_edge_list("1 2 3")
    with pytest.raises(GraphError):
        parse_edge_list("a b")
    with pytest.raises(GraphError):
        parse_edge_list("4 4")
    with pytest.raises(GraphError):
        parse_edge_list("-1 2")


def test_labeled_graph_counts():
    # 2^C(n,2) labeled graphs on n vertices
    assert sum(1 for _ in all_labeled_graphs(4)) == 64
