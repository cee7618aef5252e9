"""Plain-text edge lists.

One edge per line as ``u v``; lines starting with ``#`` are comments; an
optional ``n <count>`` line declares vertices ``0..count-1`` so isolated
vertices survive a round trip.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, TextIO

from .graph import Graph, GraphError, from_edge_list


class EdgeListError(GraphError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _nonneg(token: str, lineno: int) -> int:
    if not token.isdigit():
        raise EdgeListError(lineno, f"expected a nonnegative integer, got {token!r}")
    return int(token)


def parse_edge_list(lines: Iterable[str]) -> Graph:
    edges: list[tuple[int, int]] = []
    declared = 0
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split(" ")
        if parts[0] == "n":
            if len(parts) != 2:
                raise EdgeListError(lineno, "header must be 'n <count>'")
            declared = max(declared, _nonneg(parts[1], lineno))
            continue
        if len(parts) != 2:
            raise EdgeListError(lineno, f"expected 'u v', got {line!r}")
        u, v = _nonneg(parts[0], lineno), _nonneg(parts[1], lineno)
        if u == v:
            raise EdgeListError(lineno, f"self-loop ({u}, {v})")
        edges.append((u, v))
    return from_edge_list(edges, range(declared))


def read_edge_list(path: str | Path) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_edge_list(fh)


def format_edge_list(g: Graph) -> str:
    """Canonical text: a header when ids are exactly ``0..n-1``, then sorted edges."""
    out = []
    if g.vertices == tuple(range(g.n)):
        out.append(f"n {g.n}")
    elif any(g.degree(v) == 0 for v in g.vertices):
        raise GraphError("isolated vertices outside 0..n-1 cannot be written as an edge list")
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def write_edge_list(g: Graph, dest: str | Path | TextIO) -> None:
    text = format_edge_list(g)
    if isinstance(dest, (str, Path)):
        Path(dest).write_text(text, encoding="utf-8")
    else:
        dest.write(text)
