"""Mod-2 boundary matrices, Betti numbers, cycle bases, and stored fixtures."""

import random

import pytest

from booleancomplex import (
    BudgetError,
    Gf2Chain,
    Gf2ChainComplex,
    GraphError,
    Graph,
    an_fixture_suite,
    beta_recursive,
    betti_gf2,
    boundary_matrix,
    build_h_matching,
    complete_graph,
    edgeless_graph,
    enumerate_ideal,
    normalize,
    path_graph,
    top_betti,
    top_cycle_basis,
    verify_cycle,
)
from booleancomplex.homology import gf2_kernel, gf2_rank, gf2_rref, load_an_generators
from helpers import iso_classes, random_graph

A2 = Graph(edges=[(1, 2)])
A3 = Graph(edges=[(1, 2), (2, 3)])


def one_based_path(n):
    return Graph(edges=[(k, k + 1) for k in range(1, n)], vertices=range(1, n + 1))


def chain(graph, *cells):
    support = frozenset(normalize(c, graph) for c in cells)
    return Gf2Chain(len(cells[0]) - 1, support)


# ----------------------------------------------------------------------
# bitset elimination

def test_gf2_helpers():
    cols = [0b011, 0b110, 0b101]  # third is the sum of the first two
    assert gf2_rank(cols) == 2
    (combo,) = gf2_kernel(cols)
    assert combo == 0b111
    assert gf2_rref([0b110, 0b011, 0b101]) == [0b101, 0b110]


# ----------------------------------------------------------------------
# boundary matrices

def test_boundary_of_an_edge_cell():
    ideal = enumerate_ideal(A2)
    mat = boundary_matrix(ideal, 1)
    assert mat.n_rows == 2 and mat.n_cols == 2
    j = ideal.ranks[1].index((1, 2))
    assert mat.columns[j] == 0b11  # faces are the two vertices


def test_column_weights_are_rank_plus_one():
    rng = random.Random(101)
    for _ in range(15):
        g = random_graph(rng, rng.randint(2, 6))
        ideal = enumerate_ideal(g)
        for k in range(1, ideal.top_rank + 1):
            assert set(boundary_matrix(ideal, k).column_weights()) == {k + 1}


def test_boundary_rank_out_of_range():
    with pytest.raises(GraphError):
        boundary_matrix(enumerate_ideal(A2), 2)


def test_matrix_rows_and_entries_agree():
    ideal = enumerate_ideal(A3)
    mat = boundary_matrix(ideal, 2)
    rows = mat.rows()
    for i in range(mat.n_rows):
        for j in range(mat.n_cols):
            assert ((rows[i] >> j) & 1) == mat.entry(i, j)


def test_boundary_squares_to_zero():
    for g in iso_classes(6):
        cx = Gf2ChainComplex(enumerate_ideal(g))
        top = cx.ideal.top_rank
        for k in range(1, top + 1):
            lower = cx.boundary(k - 1)
            for col in cx.boundary(k):
                acc = 0
                for i in _bits(col):
                    acc ^= lower[i]
                assert acc == 0


def test_boundary_squares_to_zero_random_seven():
    rng = random.Random(103)
    g = random_graph(rng, 7)
    cx = Gf2ChainComplex(enumerate_ideal(g))
    for k in range(1, cx.ideal.top_rank + 1):
        lower = cx.boundary(k - 1)
        for col in cx.boundary(k):
            acc = 0
            for i in _bits(col):
                acc ^= lower[i]
            assert acc == 0


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ----------------------------------------------------------------------
# Betti numbers

def test_betti_examples():
    assert betti_gf2(path_graph(4)) == (0, 0, 0, 2)
    assert betti_gf2(edgeless_graph(3)) == (0, 0, 0)
    assert betti_gf2(complete_graph(3)) == (0, 0, 2)
    assert betti_gf2(Graph(vertices=[3])) == (0,)


def test_betti_vertex_cap():
    with pytest.raises(BudgetError):
        betti_gf2(complete_graph(8))
    with pytest.raises(BudgetError):
        top_cycle_basis(complete_graph(8))


def test_betti_concentrated_in_top_degree():
    for g in iso_classes(6):
        bt = betti_gf2(g)
        want = beta_recursive(g).value
        assert bt[:-1] == (0,) * (len(g) - 1)
        assert bt[-1] == want == top_betti(g)


def test_kernel_dimension_satisfies_rank_nullity():
    # two separate elimination routines must balance: nullity = cols - rank
    rng = random.Random(113)
    for _ in range(20):
        g = random_graph(rng, rng.randint(2, 6))
        ideal = enumerate_ideal(g)
        cols = Gf2ChainComplex(ideal).boundary(ideal.top_rank)
        assert len(gf2_kernel(cols)) == len(cols) - gf2_rank(cols)


def test_top_betti_matches_unmatched_count():
    rng = random.Random(107)
    for _ in range(10):
        g = random_graph(rng, rng.randint(2, 6))
        m = build_h_matching(g, g.vertices[0])
        assert top_betti(g) == len(m.unmatched_maximal)


# ----------------------------------------------------------------------
# cycles

def test_boundary_of_single_edge_chain_is_nonzero():
    c = chain(A2, (1, 2))
    assert not verify_cycle(A2, c)


def test_a2_generator_is_a_cycle():
    c = chain(A2, (1, 2), (2, 1))
    assert verify_cycle(A2, c)


def test_a3_generator_is_a_cycle():
    y = chain(A3, (1, 2, 3), (2, 1, 3), (3, 1, 2), (3, 2, 1))
    assert verify_cycle(A3, y)
    assert not verify_cycle(A3, chain(A3, (1, 2, 3)))


def test_verify_cycle_rejects_foreign_cells():
    with pytest.raises(GraphError):
        verify_cycle(A2, Gf2Chain(1, frozenset({(1, 2, 3)})))
    with pytest.raises(GraphError):
        verify_cycle(A2, Gf2Chain(0, frozenset({(1, 2)})))


def test_top_cycle_basis_a2():
    (c,) = top_cycle_basis(A2)
    assert c.support == {(1, 2), (2, 1)}


def test_top_cycle_basis_a3_equals_stored_cycle():
    (c,) = top_cycle_basis(A3)
    y = chain(A3, (1, 2, 3), (2, 1, 3), (3, 1, 2), (3, 2, 1))
    assert c.support == y.support


def test_top_cycle_basis_a4_spans_stored_generators():
    g = one_based_path(4)
    basis = top_cycle_basis(g)
    assert len(basis) == 2
    ideal = enumerate_ideal(g)
    cells = ideal.ranks[ideal.top_rank]
    index = {w: i for i, w in enumerate(cells)}

    def mask(support):
        acc = 0
        for w in support:
            acc |= 1 << index[w]
        return acc

    span = gf2_rref([mask(c.support) for c in basis])
    raw = load_an_generators()[4][1]
    for fixture in raw:
        vec = mask(fixture.support)
        for pivotless in span:
            low = pivotless & -pivotless
            if vec & low:
                vec ^= pivotless
        assert vec == 0  # fixture reduces to zero against the basis


def test_basis_members_are_cycles():
    rng = random.Random(109)
    for _ in range(10):
        g = random_graph(rng, rng.randint(2, 6))
        for c in top_cycle_basis(g):
            assert verify_cycle(g, c)


def test_stored_fixture_chains_verify():
    fixtures = load_an_generators()
    g5, gens5 = fixtures[5]
    assert all(verify_cycle(g5, c) for c in gens5)
    g6, gens6 = fixtures[6]
    assert all(verify_cycle(g6, c) for c in gens6)
    assert all(len(c.support) > 0 for c in gens5 + gens6)


def test_an_fixture_suite_all_green():
    rows = an_fixture_suite()
    assert [row.n for row in rows] == [2, 3, 4, 5, 6]
    assert [row.generator_count for row in rows] == [1, 1, 2, 3, 5]
    assert all(row.ok for row in rows)


def test_chain_json_round_trip():
    c = chain(A3, (1, 2, 3), (2, 1, 3))
    assert Gf2Chain.from_json(2, c.to_json()) == c
