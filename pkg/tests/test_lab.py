from collections import Counter

import networkx as nx
import numpy as np
import pytest

from goodpairs.canon import canonical_form, is_isomorphic
from goodpairs.graph import GraphError, degree_census, from_edge_list, is_connected
from goodpairs.lab import (
    ExperimentReport,
    GeneratorSpec,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    exception_search,
    generate,
    many_pairs_experiment,
    named,
    peel_good_pairs,
    random_cubic,
    random_min_degree_3,
    resilience_experiment,
    subdivided_cubic,
    theta,
)
from goodpairs.oracle import NONE, good_pair_oracle

import bruteforce


def test_theta_222_is_k23():
    assert is_isomorphic(generate(GeneratorSpec("theta", params=(2, 2, 2))), complete_bipartite(2, 3))


def test_theta_needs_simple_paths():
    with pytest.raises(GraphError):
        theta(1, 1, 3)
    assert theta(1, 2, 3).n == 5


def test_random_cubic_contract():
    g = generate(GeneratorSpec("random_cubic", n=20, seed=7))
    assert g.n == 20 and g.m == 30
    assert all(g.degree(v) == 3 for v in g.vertices)


@pytest.mark.parametrize("n", [0, 3, 7, 21])
def test_random_cubic_rejects_bad_n(n):
    with pytest.raises(GraphError):
        random_cubic(n, np.random.default_rng(0))


def test_random_min_degree_3():
    for seed in range(20):
        g = random_min_degree_3(12, np.random.default_rng(seed))
        assert min(g.degree(v) for v in g.vertices) >= 3
    with pytest.raises(GraphError):
        random_min_degree_3(3, np.random.default_rng(0))


@pytest.mark.parametrize("k", [0, 1, 2, 3, 4])
def test_subdivided_census(k):
    g = subdivided_cubic(20 + k, k, np.random.default_rng(k))
    census = degree_census(g)
    assert census.k == k
    assert +Counter(g.degree(v) for v in g.vertices) == +Counter({3: 20, 2: k})
    assert census.min_degree == (2 if k else 3)
    assert g.n == 20 + k


def test_subdivided_rejects_odd_base():
    with pytest.raises(GraphError):
        subdivided_cubic(21, 0, np.random.default_rng(0))


def test_generate_is_deterministic():
    for family, kw in [("random_cubic", {"n": 30}), ("random_min_degree_3", {"n": 15}),
                       ("subdivided", {"n": 33, "k": 3})]:
        a = generate(GeneratorSpec(family, seed=5, **kw))
        b = generate(GeneratorSpec(family, seed=5, **kw))
        c = generate(GeneratorSpec(family, seed=6, **kw))
        assert a.edges() == b.edges()
        assert a.edges() != c.edges()


def test_named_graphs():
    assert named("K4") == complete_graph(4)
    assert named("K3,3").m == 9
    assert named("petersen").n == 10
    assert named("C7") == cycle_graph(7)
    assert named("cycle", 5) == cycle_graph(5)
    with pytest.raises(GraphError):
        named("dodecahedron")
    with pytest.raises(GraphError):
        generate(GeneratorSpec("hypercube", n=8))


def test_report_shape():
    r = ExperimentReport("x", {"n": 1}, 3, trials=4, successes=3)
    assert r.rate == 0.75
    assert set(r.to_dict()) == {"experiment", "parameters", "seed", "trials", "successes", "outcomes"}


def test_resilience_small_run():
    report = resilience_experiment(40, 1, 10, seed=1)
    assert report.trials == 10 and report.successes <= report.trials
    assert report.successes == 10
    again = resilience_experiment(40, 1, 10, seed=1)
    assert report.to_dict() == again.to_dict()


def test_resilience_zero_deletions_is_theorem_check():
    report = resilience_experiment(20, 0, 5, seed=2)
    assert report.successes == 5
    assert all(o["deleted"] == [] for o in report.outcomes)


def test_resilience_k4_exploratory():
    # deleting an edge of K4 leaves K4 minus an edge, which still has a 3- and a 4-cycle
    report = resilience_experiment(4, 1, 3, seed=0)
    assert report.successes == report.trials == 3


def test_peel_counts():
    rng = np.random.default_rng(0)
    pairs, stop = peel_good_pairs(cycle_graph(6), rng)
    assert pairs == [] and stop == "none_found"
    pairs, _ = peel_good_pairs(complete_graph(4), rng)
    assert len(pairs) >= 1


def test_many_pairs_small():
    report = many_pairs_experiment(30, seed=3, trials=2)
    assert report.parameters == {"n": 30, "target": 1}
    assert report.successes == 2
    with pytest.raises(ValueError):
        many_pairs_experiment(8, seed=0)


def test_exception_search_k3_small():
    res = exception_search(3, 5)
    forms = {canonical_form(g) for g in res.graphs}
    assert canonical_form(cycle_graph(3)) in forms
    assert canonical_form(complete_bipartite(2, 3)) in forms
    assert res.exhaustive


def test_exception_search_k0_empty():
    assert exception_search(0, 7).graphs == []


def test_exception_search_k2_empty():
    assert exception_search(2, 6).graphs == []


def test_exception_search_members_are_exceptions():
    res = exception_search(4, 7)
    for g in res.graphs:
        census = degree_census(g)
        assert census.k <= 4 and census.min_degree >= 2
        assert is_connected(g)
        assert good_pair_oracle(g).status == NONE
        assert not bruteforce.has_good_pair(g)
    assert len({canonical_form(g) for g in res.graphs}) == len(res.graphs)


def test_exception_search_counts_match_atlas():
    """Good-pair-free connected graphs per order, against a plain atlas filter."""
    res = exception_search(4, 7)
    expected = Counter()
    for a in nx.graph_atlas_g()[1:]:
        if nx.is_connected(a):
            g = from_edge_list(list(a.edges()), a.nodes())
            if not bruteforce.has_good_pair(g):
                expected[g.n] += 1
    assert res.counts == dict(expected)


def test_exception_search_argument_checks():
    with pytest.raises(ValueError):
        exception_search(5, 5)
    with pytest.raises(ValueError):
        exception_search(3, 12)
