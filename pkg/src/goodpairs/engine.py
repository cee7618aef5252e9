"""Constructive search for a good pair of cycles.

The engine reduces the input by induction on its order: strip
degree-one vertices, split into components and blocks, then work on a
2-connected block through a feasible cycle ``C`` with attachment set ``A``:

* an antipodal pair of attachments plus a connector through ``H - C``
  gives two cycles whose lengths differ by one or two (extracted directly);
* otherwise a deletion (a path vertex, the degree-2 vertices of ``C``, a
  low-degree segment of ``C``, or the low-degree set ``D``) shrinks the
  instance and the search recurses.

Deletions only ever remove vertices, so every residual graph is an induced
subgraph of the input and any pair found there is a pair of the input.
Deletions never justify an absence claim: when a descent comes back empty the
engine falls back to the exhaustive oracle on the graph it deleted from, and
``none_found`` is only produced by such exhaustive runs.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .certificate import GoodPairCertificate, dumps, make_certificate, verify_certificate
from .cycles import Cycle, FeasibleCycleReport, find_feasible_cycle
from .errors import BudgetExhausted, InternalInconsistency
from .graph import (
    Graph,
    block_structure,
    components,
    delete_vertices,
    induced_subgraph,
    is_biconnected,
    is_cycle_graph,
    low_degree_vertices,
    prune_low_degree,
    shortest_path,
)
from .oracle import EXHAUSTED, FOUND, OracleBudget, find_pair_in_spectrum, good_pair_exists_in_subgraph, good_pair_oracle

_F_TABLE = {0: 3, 1: 3, 2: 3, 3: 14, 4: 56, 5: 116}


def f(k: int) -> int:
    """Vertex-count threshold guaranteeing a good pair with ``k`` low-degree vertices."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return _F_TABLE.get(k, 5 * k * k)


RULES = {
    "R0": "small instance: exhaustive search",
    "R1": "strip vertices of degree at most one",
    "R2": "split into components",
    "R3": "split at cut vertices",
    "R4": "non-feasible shape: delete first inner vertex of a path bridge",
    "R5": "antipodal attachments: extract pair",
    "R6": "sparse attachments: delete degree-2 cycle vertices",
    "R7": "two high-degree cycle vertices: delete low-degree segment",
    "R8": "delete low-degree cycle vertices D",
    "R9": "consecutive four-cycles: local search",
    "R10": "long cycle followed by its attachments: local search",
    "FB": "descent came back empty: exhaustive search",
    "JOIN": "cycles from different pieces",
}


@dataclass(frozen=True)
class EngineConfig:
    oracle_cutoff_n: int = 50
    max_chordless: int = 100_000
    max_search_steps: int | None = 2_000_000
    oracle_max_cycles: int = 10**7
    oracle_max_millis: float | None = None
    local_fallback: bool = True
    rng_seed: int = 0

    def __post_init__(self):
        if self.oracle_cutoff_n < 3:
            raise ValueError("oracle_cutoff_n must be at least 3")

    @property
    def oracle_budget(self) -> OracleBudget:
        return OracleBudget(self.oracle_max_cycles, self.oracle_max_millis)


@dataclass(frozen=True)
class TraceStep:
    rule: str
    claim: str
    deleted: tuple[int, ...]
    size_before: int
    size_after: int
    depth: int
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "rule": self.rule,
            "claim": self.claim,
            "deleted": list(self.deleted),
            "size_before": self.size_before,
            "size_after": self.size_after,
            "depth": self.depth,
            "note": self.note,
        }


@dataclass(frozen=True)
class AuditFinding:
    fact: str
    witnesses: tuple = ()


@dataclass(frozen=True)
class AuditResult:
    cycle: Cycle
    k: int
    violations: tuple[AuditFinding, ...]
    # Facts that only hold when the smaller graph is known to lack a good pair;
    # a miss here means the descent has something to find, not a bug.
    descents: tuple[AuditFinding, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


@dataclass
class ReductionTrace:
    steps: list[TraceStep] = field(default_factory=list)
    outcome: str | None = None  # "certificate" | "none_found" | "budget_exhausted"
    audits: list[AuditResult] = field(default_factory=list)

    @property
    def audit_violations(self) -> list[AuditFinding]:
        return [v for a in self.audits for v in a.violations]

    def rules_used(self) -> list[str]:
        return [s.rule for s in self.steps]

    def to_dict(self) -> dict:
        return {"outcome": self.outcome, "steps": [s.to_dict() for s in self.steps]}


# -- extraction helpers --------------------------------------------------------

def extract_antipodal(g: Graph, c: Cycle, i: int, j: int, connector: list[int]) -> GoodPairCertificate:
    """Close the connector with each arc of ``c`` between ``c[i]`` and ``c[j]``.

    ``j`` must sit ``r//2 + 1`` steps after ``i``, so the arcs have
    ``r//2 + 1`` and ``r - r//2 - 1`` edges and the two cycles differ by
    2 (even ``r``) or 1 (odd ``r``).
    """
    r = len(c)
    i, j = i % r, j % r
    if j != (i + r // 2 + 1) % r:
        raise ValueError(f"index {j} is not antipodal to {i} on a {r}-cycle")
    path = list(connector)
    if len(path) < 2 or path[0] != c[i] or path[-1] != c[j]:
        raise ValueError("connector must run from c[i] to c[j]")
    on_c = c.vertex_set
    inner = path[1:-1]
    if any(v in on_c for v in inner) or len(set(path)) != len(path):
        raise ValueError("connector touches the cycle internally or repeats a vertex")
    for a, b in zip(path, path[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"connector uses non-edge ({a}, {b})")
    d = r // 2 + 1
    if len(path) == 2 and r - d == 1:
        raise ValueError("connector is the cycle edge itself")
    back = [c[i + t] for t in range(d - 1, 0, -1)]
    forward = [c[j + t] for t in range(1, r - d)]
    return make_certificate(Cycle(tuple(path + back)), Cycle(tuple(path + forward)))


def _connector(h: Graph, c: Cycle, a: int, b: int, off: frozenset[int]) -> list[int] | None:
    src = [x for x in h.neighbors(a) if x in off]
    dst = [x for x in h.neighbors(b) if x in off]
    if not src or not dst:
        return None
    mid = shortest_path(h, src, dst, off)
    return None if mid is None else [a] + mid + [b]


def antipodal_pair(h: Graph, c: Cycle, attach: frozenset[int]) -> GoodPairCertificate | None:
    """Shortest connector over all antipodal attachment pairs (ties by index)."""
    r = len(c)
    off = frozenset(h.vertices) - c.vertex_set
    best = None
    for i in range(r):
        j = (i + r // 2 + 1) % r
        if c[i] in attach and c[j] in attach:
            path = _connector(h, c, c[i], c[j], off)
            if path is not None and (best is None or len(path) < len(best[2])):
                best = (i, j, path)
    if best is None:
        return None
    return extract_antipodal(h, c, *best)


def high_degree_segment(h: Graph, c: Cycle) -> list[int] | None:
    """Inner vertices between the first consecutive pair of degree >= 4 cycle vertices."""
    r = len(c)
    hi = [i for i in range(r) if h.degree(c[i]) >= 4]
    if len(hi) < 2:
        return None
    for a, b in zip(hi, hi[1:] + [hi[0] + r]):
        if b - a >= 2:
            return [c[t] for t in range(a + 1, b)]
    return None


def stall_audit(g: Graph, report: FeasibleCycleReport, k: int) -> AuditResult:
    """Check the structure a feasible cycle must have once no extraction applies."""
    c = report.cycle
    r = len(c)
    attach = report.attachments_A
    d_set = report.low_attach_D
    on_c = c.vertex_set
    low = low_degree_vertices(g)
    violations: list[AuditFinding] = []
    descents: list[AuditFinding] = []

    chords = c.chords(g)
    if chords:
        violations.append(AuditFinding("chordless", tuple(chords)))
    if r > 2 * k:
        violations.append(AuditFinding("length<=2k", (r, k)))
    if r % 4:
        violations.append(AuditFinding("length%4==0", (r,)))
    if attach & low or (attach | (low & on_c)) != on_c:
        violations.append(AuditFinding("partition A|B", tuple(sorted(on_c - (attach ^ (low & on_c))))))
    for i in range(r):
        if (c[i] in attach) == (c[i + 1] in attach):
            violations.append(AuditFinding("alternation", (c[i], c[i + 1])))
            break
    high = on_c - d_set
    if len(high) > 1:
        violations.append(AuditFinding("|V(C)-D|<=1", tuple(sorted(high))))
    if 2 * len(attach) != r:
        violations.append(AuditFinding("|A|=|C|/2", (len(attach), r)))

    rest = delete_vertices(g, d_set)
    low_rest = low_degree_vertices(rest)
    new_low = low_rest - low
    if 2 * len(new_low) != r:
        descents.append(AuditFinding("|A'|=|C|/2", tuple(sorted(new_low))))
    if attach & new_low != high:
        descents.append(AuditFinding("A&A'=V(C)-D", tuple(sorted(attach & new_low))))
    partners = []
    for a in sorted(attach - high):
        mates = [x for x in g.neighbors(a) if x in new_low - high]
        if len(mates) != 1:
            descents.append(AuditFinding("unique A' partner", (a, tuple(mates))))
        partners.extend(mates)
    if len(set(partners)) != len(partners):
        descents.append(AuditFinding("A-A' matching", tuple(partners)))
    if not is_biconnected(rest):
        descents.append(AuditFinding("H-D 2-connected"))
    if len(low_rest) != len(low):
        descents.append(AuditFinding("|B(H-D)|=|B(H)|", (len(low_rest), len(low))))
    return AuditResult(c, k, tuple(violations), tuple(descents))


# -- the search ------------------------------------------------------------------

# Exhaustive "no pair here": the witnessed lengths of a piece.
_Spectrum = dict
_Outcome = Union[GoodPairCertificate, _Spectrum]


@dataclass(frozen=True)
class _Previous:
    """The cycle removed by the last D-deletion, for the two-cycle local rules."""
    cycle: Cycle
    new_low: frozenset[int]


class _Run:
    def __init__(self, g: Graph, cfg: EngineConfig):
        self.g = g
        self.cfg = cfg
        self.budget = cfg.oracle_budget
        self.trace = ReductionTrace()
        self.depth_cap = max(g.n, 1)

    def log(self, rule: str, deleted, before: int, after: int, depth: int, note: str = "") -> None:
        self.trace.steps.append(
            TraceStep(rule, RULES[rule], tuple(sorted(deleted)), before, after, depth, note))

    def exhaustive(self, h: Graph, depth: int, rule: str, note: str = "") -> _Outcome:
        res = good_pair_oracle(h, self.budget)
        self.log(rule, (), h.n, h.n, depth, note or res.status)
        if res.status == FOUND:
            return res.certificate
        if res.status == EXHAUSTED:
            raise BudgetExhausted(f"oracle budget exhausted on a {h.n}-vertex piece")
        return dict(res.spectrum.witnesses)

    def solve(self, h: Graph, depth: int, prev: _Previous | None = None) -> _Outcome:
        if depth > self.depth_cap:
            raise InternalInconsistency("recursion deeper than the input order")
        if h.n <= self.cfg.oracle_cutoff_n:
            return self.exhaustive(h, depth, "R0")
        core, removed = prune_low_degree(h)
        if removed:
            self.log("R1", removed, h.n, core.n, depth)
            return self.solve(core, depth + 1)
        comps = components(h)
        if len(comps) > 1:
            self.log("R2", (), h.n, h.n, depth, f"{len(comps)} components")
            return self.solve_pieces(h, comps, depth)
        blocks = block_structure(h)
        if blocks.is_biconnected:
            return self.solve_block(h, depth, prev)
        pieces = [b for b in blocks.blocks if len(b) >= 3]
        self.log("R3", (), h.n, h.n, depth, f"cut vertices {sorted(blocks.cut_vertices)}")
        return self.solve_pieces(h, pieces, depth)

    def solve_pieces(self, h: Graph, pieces, depth: int) -> _Outcome:
        # Cycles of h are exactly the cycles of its pieces, so absent a pair
        # inside one piece, the pair may still straddle two of them.
        merged: _Spectrum = {}
        exhausted = None
        for piece in pieces:
            try:
                out = self.solve(induced_subgraph(h, piece), depth + 1)
            except BudgetExhausted as exc:
                exhausted = exc
                continue
            if isinstance(out, GoodPairCertificate):
                return out
            for length, cyc in out.items():
                merged.setdefault(length, cyc)
            cert = find_pair_in_spectrum(merged)
            if cert is not None:
                self.log("JOIN", (), h.n, h.n, depth, f"lengths {cert.lengths}")
                return cert
        if exhausted is not None:
            raise exhausted
        return merged

    def descend(self, h: Graph, deleted, depth: int, rule: str, prev: _Previous | None = None) -> _Outcome:
        rest = delete_vertices(h, deleted)
        self.log(rule, deleted, h.n, rest.n, depth)
        try:
            out = self.solve(rest, depth + 1, prev)
        except BudgetExhausted:
            out = None
        if isinstance(out, GoodPairCertificate):
            return out
        return self.exhaustive(h, depth, "FB", f"after {rule}")

    def solve_block(self, h: Graph, depth: int, prev: _Previous | None) -> _Outcome:
        if is_cycle_graph(h):
            return self.exhaustive(h, depth, "R0", "bare cycle")
        try:
            rep = find_feasible_cycle(h, True, self.cfg.max_chordless, None, self.cfg.max_search_steps)
        except BudgetExhausted:
            return self.exhaustive(h, depth, "FB", "feasible-cycle search budget")
        if rep.status == "lemma_shape":
            return self.descend(h, [rep.lemma.path[1]], depth, "R4")

        c, attach = rep.cycle, rep.attachments_A
        cert = antipodal_pair(h, c, attach)
        if cert is not None:
            self.log("R5", (), h.n, h.n, depth, f"cycle {list(c.vertices)}")
            return cert
        if 2 * len(attach) < len(c):
            return self.descend(h, [v for v in c if h.degree(v) <= 2], depth, "R6")
        seg = high_degree_segment(h, c)
        if seg:
            return self.descend(h, seg, depth, "R7")
        if prev is not None and self.cfg.local_fallback:
            cert = self.local_pair(h, c, attach, prev, depth)
            if cert is not None:
                return cert

        low = low_degree_vertices(h)
        self.trace.audits.append(stall_audit(h, rep, len(low)))
        rest_low = low_degree_vertices(delete_vertices(h, rep.low_attach_D))
        nxt = _Previous(c, rest_low - low)
        return self.descend(h, rep.low_attach_D, depth, "R8", nxt)

    def local_pair(self, h: Graph, c: Cycle, attach: frozenset[int], prev: _Previous,
                   depth: int) -> GoodPairCertificate | None:
        low_on_c = low_degree_vertices(h) & c.vertex_set
        witness = set(prev.cycle.vertices) | c.vertex_set
        if len(prev.cycle) == 4 and len(c) == 4 and prev.new_low == low_on_c:
            rule = "R9"
        elif len(prev.cycle) >= 8 and prev.new_low <= low_on_c:
            rule = "R10"
            witness |= _connector_tree(h, c, attach)
        else:
            return None
        res = good_pair_exists_in_subgraph(self.g, witness, self.budget)
        self.log(rule, (), h.n, h.n, depth, f"witness {len(witness)} vertices: {res.status}")
        return res.certificate if res.status == FOUND else None


def _connector_tree(h: Graph, c: Cycle, attach: frozenset[int]) -> set[int]:
    """Vertices of BFS paths in ``h - C`` joining the off-cycle neighbors of ``attach``."""
    off = frozenset(h.vertices) - c.vertex_set
    terminals = sorted({x for a in attach for x in h.neighbors(a) if x in off})
    tree: set[int] = set(terminals[:1])
    for t in terminals[1:]:
        path = shortest_path(h, [terminals[0]], [t], off)
        if path:
            tree.update(path)
    return tree


def find_good_pair(g: Graph, cfg: EngineConfig | None = None) -> tuple[GoodPairCertificate | None, ReductionTrace]:
    """Certificate (or None when exhaustively absent) plus the rule trace.

    Raises BudgetExhausted, carrying the trace, when a cap stops the search
    before it is decided.
    """
    run = _Run(g, cfg or EngineConfig())
    try:
        out = run.solve(g, 0)
    except BudgetExhausted as exc:
        run.trace.outcome = "budget_exhausted"
        exc.partial = run.trace
        raise
    if isinstance(out, GoodPairCertificate):
        verdict = verify_certificate(g, out)
        if not verdict:
            raise InternalInconsistency(f"engine produced an invalid certificate: {verdict.reason}")
        run.trace.outcome = "certificate"
        return out, run.trace
    run.trace.outcome = "none_found"
    return None, run.trace


def certificate_payload(cert: GoodPairCertificate | None, trace: ReductionTrace | None = None) -> dict:
    payload: dict = {"outcome": "certificate" if cert is not None else "none_found"}
    if cert is not None:
        payload.update(cert.to_dict())
    if trace is not None:
        payload["trace"] = [s.to_dict() for s in trace.steps]
    return payload


def certificate_json(cert: GoodPairCertificate | None, trace: ReductionTrace | None = None) -> str:
    return dumps(certificate_payload(cert, trace))
