"""Canonical labelling of small graphs by individualisation-refinement.

The ordered partition starts from degrees and is refined by neighbour counts
per cell until stable; the search individualises vertices of the first
non-singleton cell and keeps the smallest relabelled edge list over all
leaves. Twins (equal open or closed neighbourhoods) are interchangeable, so
only one per twin class is individualised at each node. Intended for the
sparse graphs of the exception search (n <= 11 or so), not as a general
isomorphism tool.
"""

from __future__ import annotations

from collections import Counter

from .graph import Graph, from_edge_list

CanonicalForm = tuple[int, tuple[tuple[int, int], ...]]


def _refine(cells: list[list[int]], adj: list[frozenset[int]]) -> list[list[int]]:
    while True:
        cell_of = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                cell_of[v] = ci
        out = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            sig = {v: tuple(sorted(Counter(cell_of[u] for u in adj[v]).items())) for v in cell}
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                groups.setdefault(sig[v], []).append(v)
            if len(groups) > 1:
                split = True
            out.extend(groups[key] for key in sorted(groups))
        cells = out
        if not split:
            return cells


def canonical_form(g: Graph) -> CanonicalForm:
    verts = list(g.vertices)
    n = len(verts)
    index = {v: i for i, v in enumerate(verts)}
    adj = [frozenset(index[u] for u in g.neighbors(v)) for v in verts]
    edges = [(index[a], index[b]) for a, b in g.edges()]
    if n == 0:
        return (0, ())

    by_degree: dict[int, list[int]] = {}
    for i in range(n):
        by_degree.setdefault(len(adj[i]), []).append(i)
    start = [by_degree[d] for d in sorted(by_degree)]

    best: tuple[tuple[int, int], ...] | None = None
    stack = [start]
    while stack:
        cells = _refine(stack.pop(), adj)
        target = next((t for t, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            label = {cell[0]: pos for pos, cell in enumerate(cells)}
            cert = tuple(sorted((min(label[a], label[b]), max(label[a], label[b])) for a, b in edges))
            if best is None or cert < best:
                best = cert
            continue
        cell = cells[target]
        tried_open: set[frozenset[int]] = set()
        tried_closed: set[frozenset[int]] = set()
        for v in cell:
            closed = adj[v] | {v}
            if adj[v] in tried_open or closed in tried_closed:
                continue
            tried_open.add(adj[v])
            tried_closed.add(closed)
            rest = [u for u in cell if u != v]
            stack.append(cells[:target] + [[v], rest] + cells[target + 1:])
    return (n, best)


def canonical_graph(g: Graph) -> Graph:
    n, edges = canonical_form(g)
    return from_edge_list(edges, range(n))


def is_isomorphic(a: Graph, b: Graph) -> bool:
    return a.n == b.n and a.m == b.m and canonical_form(a) == canonical_form(b)
