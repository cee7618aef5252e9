"""Cycles, chordless-cycle enumeration, bridges of a cycle and feasible cycles.

A cycle is *feasible* in ``g`` when it is induced and ``g - V(C)`` is
connected. Enumeration is shortest-first with cycles written canonically
(rotated to start at their smallest vertex, oriented so the second vertex is
smaller than the last), so every tie-break is the lexicographic one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import BudgetExhausted, InternalInconsistency
from .graph import Graph, GraphError, components, delete_vertices, is_biconnected, is_connected, is_cycle_graph


@dataclass(frozen=True)
class Cycle:
    vertices: tuple[int, ...]

    def __post_init__(self):
        vs = tuple(int(v) for v in self.vertices)
        object.__setattr__(self, "vertices", vs)
        if len(vs) < 3:
            raise GraphError(f"a cycle needs at least 3 vertices, got {vs}")
        if len(set(vs)) != len(vs):
            raise GraphError(f"cycle repeats a vertex: {vs}")

    def __len__(self) -> int:
        return len(self.vertices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.vertices)

    def __getitem__(self, i: int) -> int:
        # Indices wrap around the cycle.
        return self.vertices[i % len(self.vertices)]

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.vertices)

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        return [(vs[i], vs[(i + 1) % len(vs)]) for i in range(len(vs))]

    def canonical(self) -> Cycle:
        vs = self.vertices
        i = vs.index(min(vs))
        rot = vs[i:] + vs[:i]
        if rot[1] > rot[-1]:
            rot = (rot[0],) + rot[:0:-1]
        return Cycle(rot)

    def check(self, g: Graph) -> None:
        for u, v in self.edges():
            if not g.has_edge(u, v):
                raise GraphError(f"cycle {self.vertices} uses non-edge ({u}, {v})")

    def is_valid_in(self, g: Graph) -> bool:
        return all(g.has_edge(u, v) for u, v in self.edges())

    def chords(self, g: Graph) -> list[tuple[int, int]]:
        pos = {v: i for i, v in enumerate(self.vertices)}
        r = len(self.vertices)
        out = []
        for i, v in enumerate(self.vertices):
            for u in g.neighbors(v):
                j = pos.get(u)
                if j is not None and j > i and (j - i) % r not in (1, r - 1):
                    out.append((v, u))
        return sorted(out)

    def is_chordless_in(self, g: Graph) -> bool:
        return not self.chords(g)


# -- chordless enumeration ---------------------------------------------------

class _StepBudget:
    def __init__(self, max_steps: int | None):
        self.left = max_steps

    def spend(self, n: int = 1) -> None:
        if self.left is None:
            return
        self.left -= n
        if self.left < 0:
            raise BudgetExhausted("chordless-cycle search step budget exhausted")


def _chordless_of_length(g: Graph, length: int, budget: _StepBudget) -> list[tuple[int, ...]]:
    """All chordless cycles with ``length`` vertices, canonical and sorted."""
    found = []
    for s in g.vertices:
        up = [u for u in g.neighbors(s) if u > s]
        if len(up) < 2:
            continue
        s_nbrs = g.neighbor_set(s)
        if length == 3:
            for i, a in enumerate(up):
                for b in up[i + 1:]:
                    if g.has_edge(a, b):
                        found.append((s, a, b))
            continue
        # Grow induced paths s, p1, ..., extending only through ids > s.
        for p1 in up:
            path = [s, p1]
            on_path = {s, p1}
            stack = [iter(g.neighbors(p1))]
            while stack:
                budget.spend()
                w = next(stack[-1], None)
                if w is None:
                    stack.pop()
                    on_path.discard(path.pop())
                    continue
                if w <= s or w in on_path:
                    continue
                w_nbrs = g.neighbor_set(w)
                # w may touch only the current path end (and s, if it closes).
                if any(p in w_nbrs for p in path[1:-1]):
                    continue
                closing = len(path) == length - 1
                if closing:
                    if w in s_nbrs and p1 < w:
                        found.append(tuple(path) + (w,))
                    continue
                if w in s_nbrs:
                    continue
                path.append(w)
                on_path.add(w)
                stack.append(iter(g.neighbors(w)))
            # the loop pops p1 and s on the way out
    found.sort()
    return found


def iter_chordless_cycles(g: Graph, lengths: Iterable[int],
                          max_steps: int | None = None) -> Iterator[Cycle]:
    """Chordless cycles of the requested lengths, in that order, lexicographic within a length."""
    budget = _StepBudget(max_steps)
    for length in lengths:
        if length < 3 or length > g.n:
            continue
        for vs in _chordless_of_length(g, length, budget):
            yield Cycle(vs)


class ChordlessListing(NamedTuple):
    cycles: list[Cycle]
    complete: bool


def enumerate_chordless_cycles(g: Graph, max_count: int = 10**6,
                               length_cap: int | None = None) -> ChordlessListing:
    """Distinct chordless cycles, shortest first, up to ``max_count`` of them.

    ``complete`` is False when the count cap cut the listing short.
    """
    if max_count < 1:
        raise ValueError("max_count must be at least 1")
    cap = g.n if length_cap is None else min(length_cap, g.n)
    out: list[Cycle] = []
    for c in iter_chordless_cycles(g, range(3, cap + 1)):
        if len(out) == max_count:
            return ChordlessListing(out, False)
        out.append(c)
    return ChordlessListing(out, True)


# -- bridges -----------------------------------------------------------------

@dataclass(frozen=True)
class Bridge:
    attachments: frozenset[int]
    internal_vertices: frozenset[int]
    kind: str  # "chord" | "component"


@dataclass(frozen=True)
class BridgeDecomposition:
    cycle: Cycle
    bridges: list[Bridge]
    max_internal_bridge: int | None

    @property
    def chords(self) -> list[Bridge]:
        return [b for b in self.bridges if b.kind == "chord"]

    @property
    def component_bridges(self) -> list[Bridge]:
        return [b for b in self.bridges if b.kind == "component"]


def bridges_of_cycle(g: Graph, c: Cycle) -> BridgeDecomposition:
    c.check(g)
    on_c = c.vertex_set
    bridges = []
    rest = delete_vertices(g, on_c)
    for comp in components(rest):
        attach = frozenset(v for v in on_c if not comp.isdisjoint(g.neighbor_set(v)))
        bridges.append(Bridge(attach, comp, "component"))
    for a, b in c.chords(g):
        bridges.append(Bridge(frozenset((a, b)), frozenset(), "chord"))
    best = None
    for i, b in enumerate(bridges):
        if best is None:
            best = i
            continue
        cur = bridges[best]
        key = (len(b.internal_vertices), -min(b.internal_vertices, default=-1))
        cur_key = (len(cur.internal_vertices), -min(cur.internal_vertices, default=-1))
        if key > cur_key:
            best = i
    return BridgeDecomposition(c, bridges, best)


# -- feasible cycles ---------------------------------------------------------

def is_feasible(g: Graph, c: Cycle) -> bool:
    return c.is_valid_in(g) and c.is_chordless_in(g) and is_connected(delete_vertices(g, c.vertex_set))


class AttachmentProfile(NamedTuple):
    attachments: frozenset[int]  # cycle vertices with a neighbor off the cycle
    low: frozenset[int]  # cycle vertices of degree <= 3
    high: frozenset[int]  # the remaining cycle vertices


def attachment_profile(g: Graph, c: Cycle) -> AttachmentProfile:
    on_c = c.vertex_set
    attach = frozenset(v for v in c if not g.neighbor_set(v) <= on_c)
    low = frozenset(v for v in c if g.degree(v) <= 3)
    return AttachmentProfile(attach, low, on_c - low)


@dataclass(frozen=True)
class LemmaShape:
    u: int
    v: int
    path: tuple[int, ...]  # u = path[0], ..., path[-1] = v; at least one inner vertex


@dataclass(frozen=True)
class FeasibleCycleReport:
    cycle: Cycle
    attachments_A: frozenset[int]
    low_attach_D: frozenset[int]
    status: str  # "feasible" | "lemma_shape"
    lemma: LemmaShape | None = None
    cycles_examined: int = 0


def _path_bridge(g: Graph, bridge: Bridge, u: int, v: int) -> tuple[int, ...] | None:
    """The bridge as a u..v path, or None if it is not one."""
    inner = bridge.internal_vertices
    if bridge.attachments != frozenset((u, v)) or not inner:
        return None
    if any(g.degree(x) != 2 for x in inner):
        return None
    ends = [x for x in inner if u in g.neighbor_set(x)]
    if len(ends) != 1:
        return None
    path = [u, ends[0]]
    while True:
        nxt = [y for y in g.neighbors(path[-1]) if y != path[-2]]
        if len(nxt) != 1:
            return None
        path.append(nxt[0])
        if nxt[0] == v:
            break
        if nxt[0] not in inner:
            return None
    if len(path) - 2 != len(inner):
        return None
    return tuple(path)


def lemma_shape(g: Graph, c: Cycle) -> LemmaShape | None:
    """Check the non-feasible alternative for a chordless cycle.

    The largest bridge has exactly two attachments ``u < v`` and every other
    bridge is a ``u``-``v`` path; the first such path (by smallest inner
    vertex) is returned.
    """
    dec = bridges_of_cycle(g, c)
    if dec.max_internal_bridge is None or dec.chords:
        return None
    big = dec.bridges[dec.max_internal_bridge]
    if len(big.attachments) != 2:
        return None
    u, v = sorted(big.attachments)
    others = [b for i, b in enumerate(dec.bridges) if i != dec.max_internal_bridge]
    if not others:
        return None
    paths = []
    for b in others:
        p = _path_bridge(g, b, u, v)
        if p is None:
            return None
        paths.append((min(b.internal_vertices), p))
    return LemmaShape(u, v, min(paths)[1])


def find_feasible_cycle(g: Graph, prefer_four: bool = True, max_count: int = 10**6,
                        length_cap: int | None = None,
                        max_steps: int | None = None) -> FeasibleCycleReport:
    """A feasible cycle of ``g``, or the two-attachment shape that blocks one.

    Scans chordless cycles shortest-first (4-cycles first when
    ``prefer_four``). If none is feasible, the cycle whose largest bridge is
    biggest is reported with its ``u``-``v`` path bridge. Raises
    BudgetExhausted when the caps stop the scan before either is established.
    """
    if is_cycle_graph(g):
        raise GraphError("graph is itself a cycle")
    if not is_biconnected(g):
        raise GraphError("graph is not 2-connected")
    cap = g.n if length_cap is None else min(length_cap, g.n)
    lengths = list(range(3, cap + 1))
    if prefer_four and 4 in lengths:
        lengths.remove(4)
        lengths.insert(0, 4)

    seen: list[Cycle] = []
    complete = cap == g.n
    try:
        for c in iter_chordless_cycles(g, lengths, max_steps):
            if len(seen) == max_count:
                complete = False
                break
            seen.append(c)
            if is_connected(delete_vertices(g, c.vertex_set)):
                a, d, _ = attachment_profile(g, c)
                return FeasibleCycleReport(c, a, d, "feasible", None, len(seen))
    except BudgetExhausted:
        complete = False

    ranked = []
    for c in seen:
        dec = bridges_of_cycle(g, c)
        biggest = len(dec.bridges[dec.max_internal_bridge].internal_vertices) if dec.bridges else 0
        ranked.append((-biggest, c.vertices, c))
    ranked.sort(key=lambda t: (t[0], t[1]))
    for _, _, c in ranked:
        shape = lemma_shape(g, c)
        if shape is not None:
            a, d, _ = attachment_profile(g, c)
            return FeasibleCycleReport(c, a, d, "lemma_shape", shape, len(seen))
        if complete:
            # With the full listing, the top-ranked cycle must have the shape.
            raise InternalInconsistency(
                f"no feasible cycle and the best-bridge cycle {c.vertices} lacks the two-attachment shape")
    if complete:
        raise InternalInconsistency("2-connected graph without chordless cycles")
    raise BudgetExhausted(f"no feasible cycle among {len(seen)} chordless cycles examined",
                          partial=seen)
