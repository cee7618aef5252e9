"""Exhaustive simple-cycle search: cycle spectra and good pairs with early exit.

Cycles are enumerated with Johnson's blocking search run on the symmetric
orientation of the graph, rooted at each vertex in increasing order over the
vertices not smaller than the root. Each undirected cycle is reported once
(second vertex smaller than the last). The cost is exponential in the worst
case; ``OracleBudget`` bounds it and an exhausted budget is reported as such,
never as an absence.
"""

from __future__ import annotations

import time
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .certificate import GoodPairCertificate, make_certificate
from .cycles import Cycle
from .graph import Graph, GraphError

FOUND = "found"
NONE = "none"
EXHAUSTED = "budget_exhausted"


@dataclass(frozen=True)
class OracleBudget:
    max_cycles: int = 10**7
    max_millis: float | None = None

    def __post_init__(self):
        if self.max_cycles <= 0:
            raise ValueError("max_cycles must be positive")
        if self.max_millis is not None and self.max_millis <= 0:
            raise ValueError("max_millis must be positive")


@dataclass(frozen=True)
class CycleSpectrum:
    lengths: tuple[int, ...]
    exhaustive: bool
    cycles_examined: int
    witnesses: dict[int, Cycle] = field(default_factory=dict, compare=False, repr=False)

    def to_dict(self) -> dict:
        return {"lengths": list(self.lengths), "exhaustive": self.exhaustive}


@dataclass(frozen=True)
class OracleResult:
    status: str  # FOUND | NONE | EXHAUSTED
    certificate: GoodPairCertificate | None
    spectrum: CycleSpectrum  # lengths seen so far; complete only when status is NONE


def iter_simple_cycles(g: Graph, allowed: Iterable[int] | None = None) -> Iterator[tuple[int, ...]]:
    """Every simple cycle of ``g`` (or of its subgraph induced on ``allowed``) exactly once."""
    if allowed is None:
        verts = g.vertices
    else:
        pool = frozenset(allowed)
        verts = tuple(v for v in g.vertices if v in pool)
    for s in verts:
        # Component of s among allowed vertices >= s.
        comp = {s}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.neighbors(v):
                if u > s and u not in comp and (allowed is None or u in pool):
                    comp.add(u)
                    queue.append(u)
        if len(comp) < 3:
            continue
        adj = {v: tuple(u for u in g.neighbors(v) if u in comp) for v in comp}
        if len(adj[s]) < 2:
            continue
        yield from _circuits(s, adj)


def _circuits(s: int, adj: dict[int, tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
    blocked = {s}
    holds: dict[int, set[int]] = {v: set() for v in adj}
    path = [s]
    closed = [False]
    stack = [iter(adj[s])]
    while stack:
        w = next(stack[-1], None)
        if w is not None:
            if w == s:
                # s-v-s back-and-forth counts as closed for unblocking only.
                if len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                closed[-1] = True
            elif w not in blocked:
                path.append(w)
                closed.append(False)
                blocked.add(w)
                stack.append(iter(adj[w]))
            continue
        stack.pop()
        v = path.pop()
        found = closed.pop()
        if found:
            todo = [v]
            while todo:
                x = todo.pop()
                if x in blocked:
                    blocked.discard(x)
                    todo.extend(holds[x])
                    holds[x].clear()
        else:
            for u in adj[v]:
                holds[u].add(v)
        if closed:
            closed[-1] = closed[-1] or found


def _search(g: Graph, budget: OracleBudget, allowed: Iterable[int] | None,
            early_exit: bool) -> OracleResult:
    deadline = None
    if budget.max_millis is not None:
        deadline = time.monotonic() + budget.max_millis / 1000.0
    witnesses: dict[int, Cycle] = {}
    count = 0

    def spectrum(exhaustive: bool) -> CycleSpectrum:
        return CycleSpectrum(tuple(sorted(witnesses)), exhaustive, count, dict(witnesses))

    for vs in iter_simple_cycles(g, allowed):
        if count >= budget.max_cycles:
            return OracleResult(EXHAUSTED, None, spectrum(False))
        count += 1
        length = len(vs)
        if length not in witnesses:
            witnesses[length] = Cycle(vs)
            if early_exit:
                for d in (1, 2, -1, -2):
                    other = witnesses.get(length + d)
                    if other is not None:
                        cert = make_certificate(other, witnesses[length])
                        return OracleResult(FOUND, cert, spectrum(False))
        if deadline is not None and count % 256 == 0 and time.monotonic() > deadline:
            return OracleResult(EXHAUSTED, None, spectrum(False))
    return OracleResult(NONE, None, spectrum(True))


def find_pair_in_spectrum(witnesses: dict[int, Cycle]) -> GoodPairCertificate | None:
    """The lexicographically first pair of witnessed lengths differing by 1 or 2."""
    lengths = sorted(witnesses)
    for a in lengths:
        for d in (1, 2):
            if a + d in witnesses:
                return make_certificate(witnesses[a], witnesses[a + d])
    return None


def good_pair_oracle(g: Graph, budget: OracleBudget | None = None) -> OracleResult:
    """Exhaustive good-pair search with early exit on the first pair seen."""
    return _search(g, budget or OracleBudget(), None, early_exit=True)


def good_pair_exists_in_subgraph(g: Graph, allowed: Iterable[int],
                                 budget: OracleBudget | None = None) -> OracleResult:
    """Same contract as ``good_pair_oracle`` on the subgraph induced by ``allowed``."""
    allowed = frozenset(allowed)
    unknown = [v for v in allowed if v not in g]
    if unknown:
        raise GraphError(f"allowed set has unknown vertices {sorted(unknown)}")
    return _search(g, budget or OracleBudget(), allowed, early_exit=True)


def cycle_spectrum(g: Graph, budget: OracleBudget | None = None) -> CycleSpectrum:
    res = _search(g, budget or OracleBudget(), None, early_exit=False)
    return res.spectrum
