"""Path decompositions and the independent verifier.

Paths and cycles are plain tuples of vertex ids. A path of one vertex is
legal (it carries no edges); a cycle ``(c0, ..., c_{L-1})`` closes with the
edge ``c_{L-1} c0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import InvalidDecomposition
from .graph import Edge, Graph, degree_profile, edge_key

PathSeq = tuple[int, ...]
CycleSeq = tuple[int, ...]

THREE_FIFTHS_N = "three_fifths_n"
CFZ_ALPHA_BETA = "cfz_alpha_beta"


def path_edges(path: Sequence[int]) -> list[Edge]:
    return [edge_key(path[i], path[i + 1]) for i in range(len(path) - 1)]


def cycle_edges(cycle: Sequence[int]) -> list[Edge]:
    return [edge_key(cycle[i - 1], cycle[i]) for i in range(len(cycle))]


def is_simple_path(path: Sequence[int]) -> bool:
    return len(path) >= 1 and len(set(path)) == len(path)


def cycle_path(cycle: Sequence[int], start: int, end: int) -> PathSeq:
    """The path left after deleting edge ``start end`` from ``cycle``.

    It begins at ``start`` and finishes at ``end``.
    """
    L = len(cycle)
    i = cycle.index(start)
    if cycle[(i + 1) % L] == end:
        return tuple(cycle[(i - k) % L] for k in range(L))
    if cycle[(i - 1) % L] == end:
        return tuple(cycle[(i + k) % L] for k in range(L))
    raise ValueError(f"{start}-{end} is not an edge of cycle {tuple(cycle)}")


def cycle_neighbors(cycle: Sequence[int], v: int) -> tuple[int, int]:
    i = cycle.index(v)
    a, b = cycle[i - 1], cycle[(i + 1) % len(cycle)]
    return (a, b) if a < b else (b, a)


@dataclass
class Decomposition:
    host: Graph
    paths: list[PathSeq] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.paths)

    def stripped(self) -> Decomposition:
        """Copy without single-vertex paths."""
        return Decomposition(self.host, [p for p in self.paths if len(p) > 1])


@dataclass
class VerificationReport:
    ok: bool
    violations: list[str]

    def __bool__(self) -> bool:
        return self.ok


def verify_paths(g: Graph, paths: Iterable[Sequence[int]], exhaustive: bool = False) -> VerificationReport:
    """Check that ``paths`` are simple paths of ``g`` partitioning its edges."""
    violations: list[str] = []
    owner: dict[Edge, int] = {}
    for idx, path in enumerate(paths):
        if len(path) == 0:
            violations.append(f"path {idx}: empty")
        elif len(set(path)) != len(path):
            seen = set()
            rep = next(v for v in path if v in seen or seen.add(v))
            violations.append(f"path {idx}: repeated vertex {rep}")
        for i in range(len(path) - 1):
            u, v = path[i], path[i + 1]
            if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
                violations.append(f"path {idx}: {u}-{v} is not an edge of the graph")
                continue
            e = edge_key(u, v)
            if e in owner:
                violations.append(f"path {idx}: edge {e[0]}-{e[1]} already used by path {owner[e]}")
            else:
                owner[e] = idx
        if violations and not exhaustive:
            return VerificationReport(False, violations[:1])
    for e in g.edges():
        if e not in owner:
            violations.append(f"edge {e[0]}-{e[1]} uncovered")
            if not exhaustive:
                break
    return VerificationReport(not violations, violations)


def verify_decomposition(g: Graph, d: Decomposition | Iterable[Sequence[int]], exhaustive: bool = False) -> VerificationReport:
    paths = d.paths if isinstance(d, Decomposition) else d
    return verify_paths(g, paths, exhaustive=exhaustive)


def verify_fragment(edges: Iterable[Edge], paths: Iterable[Sequence[int]]) -> VerificationReport:
    """Check that ``paths`` partition exactly the given edge set."""
    paths = list(paths)
    n = 1 + max([max(e) for e in edges] + [max(p) for p in paths if p] + [-1])
    return verify_paths(Graph.from_edge_set(edges, n), paths, exhaustive=True)


def endpoint_count(d: Decomposition | Iterable[Sequence[int]], v: int) -> int:
    paths = d.paths if isinstance(d, Decomposition) else d
    return sum((p[0] == v) + (p[-1] == v) for p in paths)


def allowed_paths(g: Graph, kind: str) -> int:
    if kind == THREE_FIFTHS_N:
        return 3 * g.n // 5
    if kind == CFZ_ALPHA_BETA:
        prof = degree_profile(g)
        return prof.alpha // 2 + 3 * prof.beta // 5
    raise ValueError(f"unknown bound kind {kind!r}")


@dataclass
class BoundReport:
    kind: str
    allowed: int
    achieved: int
    passed: bool

    def to_dict(self) -> dict:
        return {"kind": self.kind, "allowed": self.allowed, "achieved": self.achieved, "pass": self.passed}


def bound_check(g: Graph, d: Decomposition | Sequence[Sequence[int]], kind: str) -> BoundReport:
    paths = d.paths if isinstance(d, Decomposition) else list(d)
    report = verify_paths(g, paths)
    if not report.ok:
        raise InvalidDecomposition(report.violations)
    count = sum(1 for p in paths if len(p) > 1)
    allowed = allowed_paths(g, kind)
    return BoundReport(kind, allowed, count, count <= allowed)


def certificate(g: Graph, d: Decomposition, bound: BoundReport | None, ledger=None) -> dict:
    """JSON-ready certificate; vertices are written with their input labels."""
    return {
        "n": g.n,
        "m": g.m,
        "paths": [g.relabel_path(p) for p in d.paths if len(p) > 1],
        "bound": bound.to_dict() if bound is not None else None,
        "ledger": ledger.to_dict() if ledger is not None else None,
    }


def paths_from_certificate(g: Graph, cert: dict) -> list[PathSeq]:
    """Map a certificate's labelled paths back onto vertex ids.

    Unknown labels become ``-1`` so the verifier reports them.
    """
    index = {lab: i for i, lab in enumerate(g.labels)}
    return [tuple(index.get(lab, -1) for lab in p) for p in cert.get("paths", [])]
