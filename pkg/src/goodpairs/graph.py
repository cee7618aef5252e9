"""Immutable simple undirected graphs and the structural queries built on them.

Vertex ids are nonnegative integers and are never renumbered: deleting
vertices yields an induced subgraph that keeps the original ids, so any cycle
found in a reduced graph is literally a cycle of the graph it came from.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator


class GraphError(ValueError):
    """Malformed graph input or an operation applied outside its domain."""


class DisconnectedError(GraphError):
    def __init__(self, u: int, v: int):
        super().__init__(f"graph is disconnected: {u} and {v} lie in different components")
        self.witnesses = (u, v)


class Graph:
    """Simple undirected graph with sorted, read-only adjacency."""

    __slots__ = ("_nbrs", "_nbr_sets", "_vertices", "_m")

    def __init__(self, adjacency: dict[int, Iterable[int]]):
        nbrs: dict[int, tuple[int, ...]] = {}
        for v in sorted(adjacency):
            if v < 0:
                raise GraphError(f"negative vertex id {v}")
            ns = tuple(sorted(set(adjacency[v])))
            if v in ns:
                raise GraphError(f"self-loop at vertex {v}")
            nbrs[v] = ns
        for v, ns in nbrs.items():
            for u in ns:
                if u not in nbrs:
                    raise GraphError(f"edge ({v}, {u}) references unknown vertex {u}")
                if v not in adjacency[u]:
                    raise GraphError(f"adjacency is not symmetric at edge ({v}, {u})")
        self._nbrs = nbrs
        self._nbr_sets = {v: frozenset(ns) for v, ns in nbrs.items()}
        self._vertices = tuple(nbrs)
        self._m = sum(len(ns) for ns in nbrs.values()) // 2

    @classmethod
    def _trusted(cls, nbrs: dict[int, tuple[int, ...]]) -> Graph:
        # Caller guarantees sorted keys, sorted symmetric neighbor tuples.
        g = object.__new__(cls)
        g._nbrs = nbrs
        g._nbr_sets = {v: frozenset(ns) for v, ns in nbrs.items()}
        g._vertices = tuple(nbrs)
        g._m = sum(len(ns) for ns in nbrs.values()) // 2
        return g

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return self._m

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v: object) -> bool:
        return v in self._nbrs

    def __iter__(self) -> Iterator[int]:
        return iter(self._vertices)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._nbrs[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._nbr_sets[v]

    def degree(self, v: int) -> int:
        return len(self._nbrs[v])

    def has_edge(self, u: int, v: int) -> bool:
        ns = self._nbr_sets.get(u)
        return ns is not None and v in ns

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u, ns in self._nbrs.items() for v in ns if u < v]

    def adjacency(self) -> dict[int, tuple[int, ...]]:
        return dict(self._nbrs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._nbrs == other._nbrs

    def __hash__(self) -> int:
        return hash(tuple(self._nbrs.items()))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def from_edge_list(edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> Graph:
    """Build a graph from unordered pairs; duplicates collapse, self-loops are rejected.

    ``vertices`` adds ids that may have no incident edge.
    """
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for pair in edges:
        u, v = (int(x) for x in pair)
        if u == v:
            raise GraphError(f"self-loop pair ({u}, {v})")
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    return Graph(adj)


@dataclass(frozen=True)
class DegreeCensus:
    low_degree_vertices: frozenset[int]
    k: int
    min_degree: int


def low_degree_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v in g.vertices if g.degree(v) <= 2)


def degree_census(g: Graph) -> DegreeCensus:
    low = low_degree_vertices(g)
    min_deg = min((g.degree(v) for v in g.vertices), default=0)
    return DegreeCensus(low, len(low), min_deg)


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on ``V(g) - s``; ids are preserved."""
    s = frozenset(s)
    unknown = [v for v in s if v not in g]
    if unknown:
        raise GraphError(f"cannot delete unknown vertices {sorted(unknown)}")
    if not s:
        return g
    nbrs = {
        v: tuple(u for u in g.neighbors(v) if u not in s)
        for v in g.vertices
        if v not in s
    }
    return Graph._trusted(nbrs)


def induced_subgraph(g: Graph, keep: Iterable[int]) -> Graph:
    keep = frozenset(keep)
    return delete_vertices(g, [v for v in g.vertices if v not in keep])


def delete_edges(g: Graph, edges: Iterable[tuple[int, int]]) -> Graph:
    """Same vertex set with the given edges removed."""
    gone: dict[int, set[int]] = {}
    for u, v in edges:
        if not g.has_edge(u, v):
            raise GraphError(f"cannot delete missing edge ({u}, {v})")
        gone.setdefault(u, set()).add(v)
        gone.setdefault(v, set()).add(u)
    nbrs = {
        v: tuple(u for u in ns if u not in gone.get(v, ()))
        for v, ns in g.adjacency().items()
    }
    return Graph._trusted(nbrs)


def neighbors_into(g: Graph, target: Iterable[int], source: Iterable[int]) -> frozenset[int]:
    """Vertices of ``target`` with at least one neighbor in ``source``."""
    source = frozenset(source)
    return frozenset(v for v in target if not source.isdisjoint(g.neighbor_set(v)))


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by their smallest vertex."""
    seen: set[int] = set()
    comps = []
    for root in g.vertices:
        if root in seen:
            continue
        seen.add(root)
        comp = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
                    queue.append(u)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: Graph) -> bool:
    # Empty and single-vertex graphs count as connected.
    return len(components(g)) <= 1


@dataclass(frozen=True)
class BlockStructure:
    cut_vertices: frozenset[int]
    blocks: list[frozenset[int]]

    @property
    def is_biconnected(self) -> bool:
        return not self.cut_vertices and len(self.blocks) == 1 and len(self.blocks[0]) >= 3


def block_structure(g: Graph) -> BlockStructure:
    """Blocks (maximal 2-connected pieces and bridge edges) and cut vertices.

    Iterative Hopcroft-Tarjan over an edge stack. Raises DisconnectedError on a
    disconnected input.
    """
    comps = components(g)
    if len(comps) > 1:
        raise DisconnectedError(min(comps[0]), min(comps[1]))
    if g.n == 0:
        return BlockStructure(frozenset(), [])
    root = g.vertices[0]
    if g.degree(root) == 0:
        return BlockStructure(frozenset(), [frozenset([root])])

    disc = {root: 0}
    low = {root: 0}
    counter = 1
    cuts: set[int] = set()
    blocks: list[frozenset[int]] = []
    edge_stack: list[tuple[int, int]] = []
    root_children = 0
    stack = [(root, -1, iter(g.neighbors(root)))]
    while stack:
        v, parent, it = stack[-1]
        advanced = False
        for w in it:
            if w not in disc:
                disc[w] = low[w] = counter
                counter += 1
                edge_stack.append((v, w))
                stack.append((w, v, iter(g.neighbors(w))))
                advanced = True
                break
            if w != parent and disc[w] < disc[v]:
                edge_stack.append((v, w))
                low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if not stack:
            break
        p = stack[-1][0]
        low[p] = min(low[p], low[v])
        if low[v] >= disc[p]:
            if p == root:
                root_children += 1
            else:
                cuts.add(p)
            block: set[int] = set()
            while True:
                a, b = edge_stack.pop()
                block.update((a, b))
                if (a, b) == (p, v):
                    break
            blocks.append(frozenset(block))
    if root_children > 1:
        cuts.add(root)
    blocks.sort(key=lambda b: sorted(b))
    return BlockStructure(frozenset(cuts), blocks)


def is_biconnected(g: Graph) -> bool:
    return is_connected(g) and block_structure(g).is_biconnected


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and is_connected(g) and all(g.degree(v) == 2 for v in g.vertices)


def prune_low_degree(g: Graph) -> tuple[Graph, list[int]]:
    """Repeatedly strip vertices of degree at most one; returns the core and the removal order."""
    deg = {v: g.degree(v) for v in g.vertices}
    queue = deque(v for v in g.vertices if deg[v] <= 1)
    removed: list[int] = []
    gone: set[int] = set()
    while queue:
        v = queue.popleft()
        if v in gone:
            continue
        gone.add(v)
        removed.append(v)
        for u in g.neighbors(v):
            if u not in gone:
                deg[u] -= 1
                if deg[u] == 1:
                    queue.append(u)
    return delete_vertices(g, gone), removed


def shortest_path(g: Graph, sources: Iterable[int], targets: Iterable[int],
                  allowed: frozenset[int] | None = None) -> list[int] | None:
    """BFS path from any source to any target through ``allowed`` vertices.

    Sources are tried in sorted order and neighbors are scanned sorted, so the
    result is the lexicographically first among shortest paths found by BFS.
    """
    targets = frozenset(targets)
    prev: dict[int, int | None] = {}
    queue: deque[int] = deque()
    for s in sorted(sources):
        if allowed is not None and s not in allowed:
            continue
        if s not in prev:
            prev[s] = None
            queue.append(s)
    while queue:
        v = queue.popleft()
        if v in targets:
            path = [v]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return path[::-1]
        for u in g.neighbors(v):
            if u not in prev and (allowed is None or u in allowed):
                prev[u] = v
                queue.append(u)
    return None
