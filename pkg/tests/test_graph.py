import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goodpairs.graph import (
    DisconnectedError,
    GraphError,
    block_structure,
    degree_census,
    delete_vertices,
    from_edge_list,
    is_biconnected,
    is_connected,
    neighbors_into,
    prune_low_degree,
)
from goodpairs.lab import complete_graph, cycle_graph

import bruteforce


@st.composite
def small_graphs(draw, max_n=9):
    n = draw(st.integers(1, max_n))
    pairs = [(a, b) for a in range(n) for b in range(a + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return from_edge_list(edges, range(n))


def test_triangle_from_edges():
    g = from_edge_list([(0, 1), (1, 2), (2, 0)])
    assert (g.n, g.m) == (3, 3)


def test_duplicate_edges_collapse():
    assert from_edge_list([(0, 1), (0, 1)]).m == 1
    assert from_edge_list([(0, 1), (1, 0)]).m == 1


def test_self_loop_rejected():
    with pytest.raises(GraphError, match=r"\(0, 0\)"):
        from_edge_list([(0, 0)])


def test_adjacency_must_be_symmetric():
    from goodpairs.graph import Graph
    with pytest.raises(GraphError):
        Graph({0: [1], 1: []})


def test_degree_census_examples():
    assert degree_census(cycle_graph(6)).k == 6
    assert degree_census(complete_graph(4)).k == 0
    k4_sub = from_edge_list([(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    census = degree_census(k4_sub)
    assert census.k == 1
    assert census.low_degree_vertices == {4}
    assert census.min_degree == 2


def test_is_connected_examples():
    two_triangles = from_edge_list([(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)])
    assert not is_connected(two_triangles)
    assert is_connected(from_edge_list([(0, 1), (1, 2)]))
    assert is_connected(from_edge_list([], [7]))
    assert is_connected(from_edge_list([]))


def test_block_structure_bowtie():
    bowtie = from_edge_list([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])
    bs = block_structure(bowtie)
    assert bs.cut_vertices == {2}
    assert sorted(map(sorted, bs.blocks)) == [[0, 1, 2], [2, 3, 4]]
    assert not bs.is_biconnected


def test_block_structure_cycle():
    bs = block_structure(cycle_graph(5))
    assert bs.cut_vertices == frozenset()
    assert len(bs.blocks) == 1
    assert bs.is_biconnected


def test_block_structure_rejects_disconnected():
    g = from_edge_list([(0, 1), (2, 3)])
    with pytest.raises(DisconnectedError) as info:
        block_structure(g)
    assert info.value.witnesses == (0, 2)


@settings(max_examples=300, deadline=None)
@given(small_graphs())
def test_block_structure_matches_brute_force(g):
    if not is_connected(g):
        return
    bs = block_structure(g)
    assert set(bs.cut_vertices) == bruteforce.cut_vertices(g)
    # every edge in exactly one block
    for u, v in g.edges():
        assert sum(1 for b in bs.blocks if u in b and v in b) == 1
    for i, a in enumerate(bs.blocks):
        for b in bs.blocks[i + 1:]:
            shared = a & b
            assert len(shared) <= 1
            assert shared <= bs.cut_vertices


def test_block_structure_random_seeded():
    rng = random.Random(7)
    for _ in range(500):
        g = bruteforce.random_connected(rng, rng.randint(1, 9))
        assert set(block_structure(g).cut_vertices) == bruteforce.cut_vertices(g)


def test_delete_vertices_examples():
    c4 = cycle_graph(4)
    p3 = delete_vertices(c4, {0})
    assert p3.vertices == (1, 2, 3)
    assert p3.edges() == [(1, 2), (2, 3)]
    assert delete_vertices(c4, set()) == c4
    k4 = complete_graph(4)
    assert delete_vertices(k4, {0, 1}).edges() == [(2, 3)]
    assert k4.m == 6  # original untouched


def test_delete_unknown_vertex():
    with pytest.raises(GraphError):
        delete_vertices(cycle_graph(4), {9})


@given(small_graphs(), st.data())
def test_delete_vertices_composes(g, data):
    verts = list(g.vertices)
    a = set(data.draw(st.lists(st.sampled_from(verts), unique=True)))
    rest = [v for v in verts if v not in a]
    b = set(data.draw(st.lists(st.sampled_from(rest), unique=True))) if rest else set()
    assert delete_vertices(delete_vertices(g, a), b) == delete_vertices(g, a | b)


@given(small_graphs(), st.data())
def test_deletion_changes_only_neighbor_degrees(g, data):
    v = data.draw(st.sampled_from(list(g.vertices)))
    h = delete_vertices(g, {v})
    for u in h.vertices:
        if u in g.neighbor_set(v):
            assert h.degree(u) == g.degree(u) - 1
        else:
            assert h.degree(u) == g.degree(u)


def test_neighbors_into_examples():
    c4 = cycle_graph(4)
    assert neighbors_into(c4, {0, 1}, {2}) == {1}
    assert neighbors_into(c4, {0, 1}, set()) == frozenset()
    star = from_edge_list([(0, 1), (0, 2), (0, 3)])
    assert neighbors_into(star, {1, 2, 3}, {0}) == {1, 2, 3}


def test_prune_low_degree_strips_trees():
    # triangle with a pendant path 2-3-4
    g = from_edge_list([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
    core, removed = prune_low_degree(g)
    assert core.vertices == (0, 1, 2)
    assert set(removed) == {3, 4}


def test_is_biconnected():
    assert is_biconnected(complete_graph(4))
    assert not is_biconnected(from_edge_list([(0, 1)]))
    assert not is_biconnected(from_edge_list([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]))
