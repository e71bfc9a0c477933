"""Plain-text edge lists.

One ``u v`` pair of non-negative integers per line, ``#`` starts a comment
line, and an optional ``n <count>`` header declares the vertex count so
isolated vertices survive a round trip.
"""

from __future__ import annotations

from pathlib import Path

from .errors import MalformedInput
from .graph import Graph, build_graph


def parse_edge_list(text: str) -> Graph:
    declared = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "n":
            if declared is not None or edges or len(parts) != 2:
                raise MalformedInput(f"line {lineno}: misplaced or malformed header")
            declared = _nonneg(parts[1], lineno)
            continue
        if len(parts) != 2:
            raise MalformedInput(f"line {lineno}: expected 'u v', got {line!r}")
        edges.append((_nonneg(parts[0], lineno), _nonneg(parts[1], lineno)))
    return build_graph(edges, declared)


def _nonneg(token: str, lineno: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise MalformedInput(f"line {lineno}: {token!r} is not an integer") from None
    if value < 0:
        raise MalformedInput(f"line {lineno}: negative vertex {value}")
    return value


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
