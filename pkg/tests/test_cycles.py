import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from goodpairs.cycles import (
    Cycle,
    attachment_profile,
    bridges_of_cycle,
    enumerate_chordless_cycles,
    find_feasible_cycle,
    is_feasible,
    lemma_shape,
)
from goodpairs.errors import BudgetExhausted
from goodpairs.graph import GraphError, delete_vertices, from_edge_list, is_connected, low_degree_vertices
from goodpairs.lab import complete_bipartite, complete_graph, cycle_graph, petersen, random_cubic, theta

import bruteforce


def test_cycle_basics():
    c = Cycle((3, 1, 2))
    assert c.length == 3
    assert c[3] == 3 and c[-1] == 2
    assert c.canonical().vertices == (1, 2, 3)
    assert Cycle((2, 5, 4, 3)).canonical().vertices == (2, 3, 4, 5)
    with pytest.raises(GraphError):
        Cycle((1, 2))
    with pytest.raises(GraphError):
        Cycle((1, 2, 1))


def test_chordless_k4():
    cycles, complete = enumerate_chordless_cycles(complete_graph(4))
    assert complete
    assert [len(c) for c in cycles] == [3, 3, 3, 3]


def test_chordless_c6():
    cycles, complete = enumerate_chordless_cycles(cycle_graph(6))
    assert complete and [c.vertices for c in cycles] == [(0, 1, 2, 3, 4, 5)]


def test_chordless_forest_is_empty():
    cycles, complete = enumerate_chordless_cycles(from_edge_list([(0, 1), (1, 2), (1, 3)]))
    assert cycles == [] and complete


def test_chordless_petersen_matches_subset_scan():
    g = petersen()
    cycles, complete = enumerate_chordless_cycles(g)
    expected = bruteforce.chordless_cycle_sets(g)
    assert complete
    assert {c.vertex_set for c in cycles} == expected
    assert len(cycles) == len(expected)
    # shortest first, lexicographic within a length
    keys = [(len(c), c.vertices) for c in cycles]
    assert keys == sorted(keys)


def test_chordless_random_matches_subset_scan():
    rng = random.Random(11)
    for _ in range(150):
        g = bruteforce.random_connected(rng, rng.randint(3, 9))
        cycles, _ = enumerate_chordless_cycles(g)
        expected = bruteforce.chordless_cycle_sets(g)
        assert {c.vertex_set for c in cycles} == expected, g.edges()
        assert len(cycles) == len(expected)
        for c in cycles:
            assert c.is_valid_in(g) and c.is_chordless_in(g)
            assert c.canonical() == c


def test_chordless_truncation_flag():
    cycles, complete = enumerate_chordless_cycles(petersen(), max_count=3)
    assert len(cycles) == 3 and not complete
    cycles, complete = enumerate_chordless_cycles(petersen(), length_cap=5)
    assert all(len(c) == 5 for c in cycles) and len(cycles) == 12


def test_bridges_k4_triangle():
    dec = bridges_of_cycle(complete_graph(4), Cycle((0, 1, 2)))
    assert len(dec.bridges) == 1
    b = dec.bridges[0]
    assert b.kind == "component" and b.internal_vertices == {3} and b.attachments == {0, 1, 2}
    assert dec.max_internal_bridge == 0


def test_bridges_chord():
    g = from_edge_list([(i, (i + 1) % 6) for i in range(6)] + [(0, 3)])
    dec = bridges_of_cycle(g, Cycle(tuple(range(6))))
    assert [(b.kind, b.attachments) for b in dec.bridges] == [("chord", {0, 3})]


def test_bridges_theta():
    g = theta(2, 2, 2)  # hubs 0, 1; middles 2, 3, 4
    dec = bridges_of_cycle(g, Cycle((0, 2, 1, 3)))
    assert len(dec.bridges) == 1
    assert dec.bridges[0].internal_vertices == {4}
    assert dec.bridges[0].attachments == {0, 1}


def test_bridges_invalid_cycle():
    with pytest.raises(GraphError):
        bridges_of_cycle(cycle_graph(5), Cycle((0, 1, 3)))


def test_bridge_tie_break_lowest_internal_id():
    # two pendant paths of equal size hanging between 0 and 2 of a 4-cycle
    g = from_edge_list([(0, 1), (1, 2), (2, 3), (3, 0), (0, 7), (7, 2), (0, 5), (5, 2)])
    dec = bridges_of_cycle(g, Cycle((0, 1, 2, 3)))
    assert dec.bridges[dec.max_internal_bridge].internal_vertices == {5}


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6))
def test_bridge_invariants(seed):
    rng = random.Random(seed)
    g = bruteforce.random_connected(rng, rng.randint(3, 9))
    cycles, _ = enumerate_chordless_cycles(g)
    for c in cycles[:5]:
        dec = bridges_of_cycle(g, c)
        assert sum(len(b.internal_vertices) for b in dec.component_bridges) == g.n - len(c)
        assert not dec.chords
    if cycles:
        # any non-induced cycle reports its chords as chord bridges
        for vs in sorted(bruteforce.simple_cycles(g))[:150]:
            c = Cycle(vs)
            assert c.is_chordless_in(g) == (not bridges_of_cycle(g, c).chords)


def test_feasible_k4():
    rep = find_feasible_cycle(complete_graph(4))
    assert rep.status == "feasible" and len(rep.cycle) == 3


def test_feasible_k23_prefers_four():
    rep = find_feasible_cycle(complete_bipartite(2, 3))
    assert rep.status == "feasible" and len(rep.cycle) == 4


def test_feasible_petersen_every_five_cycle():
    g = petersen()
    five = [c for c in bruteforce.simple_cycles(g) if len(c) == 5]
    assert len(five) == 12
    for vs in five:
        rest = delete_vertices(g, set(vs))
        assert bruteforce.count_components({v: set(rest.neighbors(v)) for v in rest.vertices}) == 1
        assert is_feasible(g, Cycle(vs))
    rep = find_feasible_cycle(g)
    assert rep.status == "feasible" and len(rep.cycle) == 5


def test_feasible_prefers_four_over_triangle():
    # K4 with a 4-cycle glued along an edge: triangles exist, but a feasible 4-cycle too
    g = from_edge_list([(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (4, 5), (5, 3)])
    assert len(find_feasible_cycle(g, prefer_four=True).cycle) == 4
    assert len(find_feasible_cycle(g, prefer_four=False).cycle) == 3


def test_lemma_shape_on_k24():
    g = complete_bipartite(2, 4)  # hubs 0, 1; no induced cycle leaves a connected rest
    rep = find_feasible_cycle(g)
    assert rep.status == "lemma_shape"
    shape = rep.lemma
    assert (shape.u, shape.v) == (0, 1)
    assert len(shape.path) == 3 and shape.path[0] == 0 and shape.path[-1] == 1
    assert g.degree(shape.u) >= 4 and g.degree(shape.v) >= 4
    assert shape.path[1] not in rep.cycle.vertex_set


def test_lemma_shape_none_for_feasible():
    assert lemma_shape(complete_graph(4), Cycle((0, 1, 2))) is None


def test_find_feasible_rejects_bad_input():
    with pytest.raises(GraphError):
        find_feasible_cycle(cycle_graph(5))
    with pytest.raises(GraphError):
        find_feasible_cycle(from_edge_list([(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]))


def test_find_feasible_budget():
    g = complete_bipartite(2, 4)
    with pytest.raises(BudgetExhausted):
        find_feasible_cycle(g, max_steps=2)


def test_attachment_profile_k23():
    g = complete_bipartite(2, 3)  # side {0,1} has degree 3
    c = Cycle((0, 2, 1, 3))
    a, d, high = attachment_profile(g, c)
    assert a == {0, 1}
    assert d == c.vertex_set
    assert high == frozenset()


def test_attachment_profile_cubic():
    g = random_cubic(20, np.random.default_rng(3))
    rep = find_feasible_cycle(g)
    assert rep.low_attach_D == rep.cycle.vertex_set
    assert rep.attachments_A == rep.cycle.vertex_set


def test_feasible_partition_invariant():
    rng = random.Random(5)
    checked = 0
    for _ in range(400):
        g = bruteforce.random_connected(rng, rng.randint(4, 9), rng.uniform(0.2, 0.6))
        if min(g.degree(v) for v in g.vertices) < 2:
            continue
        for c in enumerate_chordless_cycles(g).cycles:
            if not is_feasible(g, c):
                continue
            assert is_connected(delete_vertices(g, c.vertex_set))
            a, _, _ = attachment_profile(g, c)
            low_on_c = low_degree_vertices(g) & c.vertex_set
            assert a | low_on_c == c.vertex_set
            assert not a & low_on_c
            checked += 1
    assert checked > 100
