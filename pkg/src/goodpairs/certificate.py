"""Good-pair certificates and their independent checker.

``verify_certificate`` recomputes everything from the raw adjacency of the
graph it is handed; it deliberately imports nothing from the search code.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import NamedTuple

from .cycles import Cycle
from .graph import Graph


@dataclass(frozen=True)
class GoodPairCertificate:
    cycle_a: Cycle
    cycle_b: Cycle

    @property
    def lengths(self) -> tuple[int, int]:
        return (len(self.cycle_a), len(self.cycle_b))

    @property
    def length_delta(self) -> int:
        return abs(len(self.cycle_a) - len(self.cycle_b))

    def to_dict(self) -> dict:
        return {
            "cycles": [list(self.cycle_a.vertices), list(self.cycle_b.vertices)],
            "lengths": list(self.lengths),
            "delta": self.length_delta,
        }

    @classmethod
    def from_dict(cls, data: dict) -> GoodPairCertificate:
        a, b = data["cycles"]
        return cls(Cycle(tuple(a)), Cycle(tuple(b)))


def make_certificate(a: Cycle, b: Cycle) -> GoodPairCertificate:
    """Order the pair shorter-first (ties by vertex sequence)."""
    if (len(b), b.vertices) < (len(a), a.vertices):
        a, b = b, a
    return GoodPairCertificate(a, b)


class Verdict(NamedTuple):
    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


def _check_cycle(g: Graph, seq) -> str | None:
    vs = list(seq)
    if len(vs) < 3:
        return "too-short"
    if len(set(vs)) != len(vs):
        return "repeated-vertex"
    for v in vs:
        if v not in g:
            return "unknown-vertex"
    for i in range(len(vs)):
        u, w = vs[i], vs[(i + 1) % len(vs)]
        if w not in g.neighbor_set(u):
            return "non-edge"
    return None


def verify_certificate(g: Graph, cert: GoodPairCertificate) -> Verdict:
    """True iff both cycles are simple cycles of ``g`` whose lengths differ by 1 or 2."""
    for name, c in (("cycle_a", cert.cycle_a), ("cycle_b", cert.cycle_b)):
        problem = _check_cycle(g, c.vertices)
        if problem:
            return Verdict(False, f"{name}:{problem}")
    delta = abs(len(cert.cycle_a.vertices) - len(cert.cycle_b.vertices))
    if delta not in (1, 2):
        return Verdict(False, f"delta-{delta}")
    return Verdict(True, "ok")


def dumps(payload: dict) -> str:
    """Byte-stable JSON."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"))
