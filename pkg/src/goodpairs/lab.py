"""Graph generators and the desk-scale experiments.

Randomness comes from ``numpy.random.default_rng``; experiment trials derive
their own stream from ``(seed, trial)`` so any single trial can be replayed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .canon import canonical_form
from .certificate import GoodPairCertificate
from .engine import EngineConfig, find_good_pair
from .errors import BudgetExhausted
from .graph import Graph, GraphError, degree_census, delete_edges, from_edge_list
from .oracle import EXHAUSTED, FOUND, OracleBudget, good_pair_oracle

FAMILIES = ("random_min_degree_3", "random_cubic", "subdivided", "theta", "named")
CUBIC_RETRIES = 10**4


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    n: int = 0
    seed: int = 0
    k: int = 0  # subdivided edges
    params: tuple[int, ...] = ()  # theta path lengths
    name: str = ""  # named graph


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def random_cubic(n: int, rng: np.random.Generator) -> Graph:
    """Uniform simple 3-regular graph from the pairing model, rejecting multigraphs."""
    if n < 4 or n % 2:
        raise GraphError(f"cubic graphs need an even n >= 4, got {n}")
    points = np.repeat(np.arange(n), 3)
    for _ in range(CUBIC_RETRIES):
        perm = rng.permutation(points)
        pairs = perm.reshape(-1, 2)
        if np.any(pairs[:, 0] == pairs[:, 1]):
            continue
        edges = {(min(a, b), max(a, b)) for a, b in pairs.tolist()}
        if len(edges) == len(pairs):
            return from_edge_list(sorted(edges))
    raise GraphError(f"no simple pairing after {CUBIC_RETRIES} tries")


def random_min_degree_3(n: int, rng: np.random.Generator) -> Graph:
    """Add random edges at the lowest-degree vertices until every degree is at least 3."""
    if n < 4:
        raise GraphError(f"minimum degree 3 needs n >= 4, got {n}")
    adj: list[set[int]] = [set() for _ in range(n)]
    while True:
        low = [v for v in range(n) if len(adj[v]) < 3]
        if not low:
            break
        v = low[int(rng.integers(len(low)))]
        choices = [u for u in range(n) if u != v and u not in adj[v]]
        u = choices[int(rng.integers(len(choices)))]
        adj[v].add(u)
        adj[u].add(v)
    return Graph({v: adj[v] for v in range(n)})


def subdivided_cubic(n: int, k: int, rng: np.random.Generator) -> Graph:
    """Random cubic graph on ``n - k`` vertices with ``k`` distinct edges subdivided once.

    New vertices take ids ``n - k .. n - 1``.
    """
    base_n = n - k
    if k < 0 or base_n < 4 or base_n % 2:
        raise GraphError(f"subdivided({k}) needs n - k even and >= 4, got n={n}")
    base = random_cubic(base_n, rng)
    edges = base.edges()
    if k > len(edges):
        raise GraphError(f"cannot subdivide {k} of {len(edges)} edges")
    picked = sorted(rng.choice(len(edges), size=k, replace=False).tolist())
    chosen = {edges[i] for i in picked}
    out = [e for e in edges if e not in chosen]
    for new, (a, b) in zip(range(base_n, n), (edges[i] for i in picked)):
        out += [(a, new), (new, b)]
    return from_edge_list(out)


def theta(a: int, b: int, c: int) -> Graph:
    """Hubs 0 and 1 joined by internally disjoint paths with a, b and c edges."""
    lengths = (a, b, c)
    if min(lengths) < 1 or sorted(lengths)[1] < 2:
        raise GraphError(f"theta{lengths} would need parallel edges")
    edges = []
    nxt = 2
    for length in lengths:
        prev = 0
        for _ in range(length - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
    return from_edge_list(edges)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need n >= 3")
    return from_edge_list([(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return from_edge_list([(i, j) for i in range(n) for j in range(i + 1, n)], range(n))


def complete_bipartite(a: int, b: int) -> Graph:
    return from_edge_list([(i, a + j) for i in range(a) for j in range(b)], range(a + b))


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edge_list(outer + spokes + inner)


def named(name: str, n: int = 0) -> Graph:
    key = name.lower().replace("_", "").replace(",", "")
    fixed = {
        "k4": lambda: complete_graph(4),
        "k33": lambda: complete_bipartite(3, 3),
        "k23": lambda: complete_bipartite(2, 3),
        "petersen": petersen,
    }
    if key in fixed:
        return fixed[key]()
    if key.startswith("c") and key[1:].isdigit():
        return cycle_graph(int(key[1:]))
    if key.startswith("k") and key[1:].isdigit():
        return complete_graph(int(key[1:]))
    if key == "cycle":
        return cycle_graph(n)
    if key == "complete":
        return complete_graph(n)
    raise GraphError(f"unknown named graph {name!r}")


def generate(gen: GeneratorSpec) -> Graph:
    rng = _rng(gen.seed)
    if gen.family == "random_cubic":
        return random_cubic(gen.n, rng)
    if gen.family == "random_min_degree_3":
        return random_min_degree_3(gen.n, rng)
    if gen.family == "subdivided":
        return subdivided_cubic(gen.n, gen.k, rng)
    if gen.family == "theta":
        if len(gen.params) != 3:
            raise GraphError("theta needs three path lengths")
        return theta(*gen.params)
    if gen.family == "named":
        return named(gen.name, gen.n)
    raise GraphError(f"unknown family {gen.family!r}; expected one of {FAMILIES}")


# -- experiments -------------------------------------------------------------------

@dataclass
class ExperimentReport:
    name: str
    parameters: dict
    seed: int
    trials: int = 0
    successes: int = 0
    outcomes: list[dict] = field(default_factory=list)

    @property
    def rate(self) -> float:
        return self.successes / self.trials if self.trials else 0.0

    def to_dict(self) -> dict:
        return {
            "experiment": self.name,
            "parameters": self.parameters,
            "seed": self.seed,
            "trials": self.trials,
            "successes": self.successes,
            "outcomes": self.outcomes,
        }


def _run_engine(g: Graph, cfg: EngineConfig | None) -> tuple[str, GoodPairCertificate | None]:
    try:
        cert, _ = find_good_pair(g, cfg)
    except BudgetExhausted:
        return "budget_exhausted", None
    return ("certificate" if cert else "none_found"), cert


def resilience_experiment(n: int, edges_to_delete: int, trials: int, seed: int,
                          cfg: EngineConfig | None = None) -> ExperimentReport:
    """Random cubic graphs with random edges removed; success means a certificate."""
    report = ExperimentReport("resilience", {"n": n, "edges_to_delete": edges_to_delete,
                                             "headline_bound": math.isqrt(n) // 5}, seed)
    for trial in range(trials):
        rng = _rng([seed, trial])
        g = random_cubic(n, rng)
        edges = g.edges()
        idx = sorted(rng.choice(len(edges), size=min(edges_to_delete, len(edges)), replace=False).tolist())
        removed = [edges[i] for i in idx]
        outcome, cert = _run_engine(delete_edges(g, removed), cfg)
        report.trials += 1
        report.successes += outcome == "certificate"
        report.outcomes.append({
            "trial": trial,
            "deleted": [list(e) for e in removed],
            "outcome": outcome,
            "lengths": list(cert.lengths) if cert else None,
        })
    return report


def peel_good_pairs(g: Graph, rng: np.random.Generator, cfg: EngineConfig | None = None,
                    max_rounds: int | None = None) -> tuple[list[GoodPairCertificate], str]:
    """Find a pair, cut one edge on each of its cycles, repeat until the engine stops.

    Returns the pairs found and the outcome that ended the loop.
    """
    pairs = []
    while max_rounds is None or len(pairs) < max_rounds:
        outcome, cert = _run_engine(g, cfg)
        if cert is None:
            return pairs, outcome
        pairs.append(cert)
        ea = cert.cycle_a.edges()[int(rng.integers(len(cert.cycle_a)))]
        eb_choices = [e for e in cert.cycle_b.edges() if set(e) != set(ea)]
        eb = eb_choices[int(rng.integers(len(eb_choices)))]
        g = delete_edges(g, [ea, eb])
    return pairs, "max_rounds"


MANY_PAIRS_ENGINE = EngineConfig(oracle_max_cycles=200_000, oracle_max_millis=5_000)


def many_pairs_experiment(n: int, seed: int, trials: int = 1,
                          cfg: EngineConfig | None = MANY_PAIRS_ENGINE) -> ExperimentReport:
    """Count pairs peeled from random cubic graphs; success is at least isqrt(n)//5 of them.

    Budget exhaustion ends a trial like any other failure, so counts are lower bounds.
    """
    if n < 10:
        raise ValueError("many_pairs_experiment needs n >= 10")
    target = math.isqrt(n) // 5
    report = ExperimentReport("many_pairs", {"n": n, "target": target}, seed)
    for trial in range(trials):
        rng = _rng([seed, trial])
        g = random_cubic(n, rng)
        pairs, stop = peel_good_pairs(g, rng, cfg)
        report.trials += 1
        report.successes += len(pairs) >= target
        report.outcomes.append({"trial": trial, "pairs": len(pairs), "stopped_by": stop})
    return report


@dataclass
class ExceptionSearchResult:
    graphs: list[Graph]
    exhaustive: bool
    k: int
    max_n: int
    counts: dict[int, int] = field(default_factory=dict)  # good-pair-free connected graphs per order


def _add_vertex(h: Graph, nbrs: list[int]) -> Graph:
    new = h.n
    adj = {v: list(h.neighbors(v)) for v in h.vertices}
    adj[new] = list(nbrs)
    for u in nbrs:
        adj[u].append(new)
    return Graph(adj)


def exception_search(k: int, max_n: int, budget: OracleBudget | None = None) -> ExceptionSearchResult:
    """Connected graphs, up to isomorphism, with min degree >= 2, at most ``k``
    vertices of degree <= 2, at most ``max_n`` vertices and no good pair.

    Having no good pair survives vertex deletion, and every connected graph has
    a vertex whose removal leaves it connected, so all such graphs grow one
    vertex at a time from good-pair-free connected graphs; each level is
    deduplicated by canonical form.
    """
    if not 0 <= k <= 4:
        raise ValueError("k must be in 0..4")
    if not 1 <= max_n <= 11:
        raise ValueError("max_n must be in 1..11")
    budget = budget or OracleBudget()
    level = {canonical_form(from_edge_list([], [0])): from_edge_list([], [0])}
    exhaustive = True
    found: list[Graph] = []
    counts = {1: 1}
    for n in range(2, max_n + 1):
        nxt: dict = {}
        for h in level.values():
            for mask in range(1, 1 << (n - 1)):
                cand = _add_vertex(h, [i for i in range(n - 1) if mask >> i & 1])
                res = good_pair_oracle(cand, budget)
                if res.status == FOUND:
                    continue
                if res.status == EXHAUSTED:
                    exhaustive = False
                    continue
                key = canonical_form(cand)
                if key not in nxt:
                    nxt[key] = from_edge_list(key[1], range(n))
        level = nxt
        counts[n] = len(level)
        for key in sorted(level):
            g = level[key]
            census = degree_census(g)
            if census.min_degree >= 2 and census.k <= k:
                found.append(g)
    return ExceptionSearchResult(found, exhaustive, k, max_n, counts)
