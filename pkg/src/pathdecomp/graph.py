"""Simple undirected graphs on dense integer vertices.

Input labels are remapped to ``0..n-1`` in sorted label order; the label
table is kept on the graph so certificates can be written back in the
caller's vocabulary.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Iterable, Sequence

from .errors import LoopEdge, MalformedInput, NotATriangle

Edge = tuple[int, int]
Triangle = tuple[int, int, int]


def edge_key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    adjacency: tuple[frozenset[int], ...]
    labels: tuple[Hashable, ...] = field(default=())

    def __post_init__(self):
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(len(self.adjacency))))

    @property
    def n(self) -> int:
        return len(self.adjacency)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adjacency) // 2

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self.adjacency[u]

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return [(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v]

    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges())

    def remove_vertices(self, removed: Iterable[int]) -> Graph:
        """Delete all edges at ``removed``; the vertices stay as isolated ones."""
        gone = set(removed)
        adj = tuple(
            frozenset() if v in gone else frozenset(self.adjacency[v] - gone)
            for v in range(self.n)
        )
        return Graph(adj, self.labels)

    def with_edges(self, extra: Iterable[Edge]) -> Graph:
        adj = [set(nb) for nb in self.adjacency]
        for u, v in extra:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return Graph(tuple(frozenset(a) for a in adj), self.labels)

    def label_of(self, v: int) -> Hashable:
        return self.labels[v]

    def relabel_path(self, path: Sequence[int]) -> list:
        return [self.labels[v] for v in path]

    @classmethod
    def from_edge_set(cls, edges: Iterable[Edge], n: int | None = None) -> Graph:
        """Graph on vertex ids used as-is (no remapping)."""
        edges = list(edges)
        if n is None:
            n = 1 + max((max(e) for e in edges), default=-1)
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        return cls(tuple(frozenset(a) for a in adj))


def build_graph(edges: Iterable[tuple[Hashable, Hashable]], vertex_count: int | None = None) -> Graph:
    """Build a graph from label pairs.

    Duplicate pairs (in either orientation) collapse to one edge. When
    ``vertex_count`` exceeds the number of distinct labels, the smallest
    unused non-negative integers are added as isolated vertices.
    """
    pairs = list(edges)
    seen: set = set()
    for u, v in pairs:
        if u == v:
            raise LoopEdge(f"loop at vertex {u!r}")
        seen.add(u)
        seen.add(v)
    if vertex_count is not None:
        if vertex_count < len(seen):
            raise MalformedInput(f"declared {vertex_count} vertices but edges use {len(seen)}")
        filler = 0
        while len(seen) < vertex_count:
            if filler not in seen:
                seen.add(filler)
            filler += 1
    try:
        labels = sorted(seen)
    except TypeError as exc:
        raise MalformedInput("vertex labels must be mutually comparable") from exc
    index = {lab: i for i, lab in enumerate(labels)}
    adj: list[set[int]] = [set() for _ in labels]
    for u, v in pairs:
        a, b = index[u], index[v]
        adj[a].add(b)
        adj[b].add(a)
    return Graph(tuple(frozenset(s) for s in adj), tuple(labels))


@dataclass(frozen=True)
class DegreeProfile:
    alpha: int
    beta: int
    parity: dict[int, str]


def degree_profile(g: Graph) -> DegreeProfile:
    parity = {v: "odd" if g.degree(v) % 2 else "even" for v in g.vertices()}
    alpha = sum(1 for v in g.vertices() if g.degree(v) % 2)
    beta = sum(1 for v in g.vertices() if g.degree(v) > 0 and g.degree(v) % 2 == 0)
    return DegreeProfile(alpha, beta, parity)


def enumerate_triangles(g: Graph) -> list[Triangle]:
    """All triangles ``(u, v, w)`` with ``u < v < w``, in lexicographic order."""
    found = []
    for u in g.vertices():
        higher = sorted(w for w in g.adjacency[u] if w > u)
        for v in higher:
            for w in sorted(g.adjacency[v] & g.adjacency[u]):
                if w > v:
                    found.append((u, v, w))
    return found


def is_triangle_free(g: Graph) -> bool:
    for u in g.vertices():
        for v in g.adjacency[u]:
            if v > u and any(w > v for w in g.adjacency[u] & g.adjacency[v]):
                return False
    return True


def _check_triangle(g: Graph, tri: Sequence[int]) -> None:
    a, b, c = tri
    if len({a, b, c}) != 3 or not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
        raise NotATriangle(f"{tuple(tri)} is not a triangle of the graph")


def bfs_distances(g: Graph, sources: Iterable[int]) -> dict[int, int]:
    dist = {s: 0 for s in sources}
    queue = deque(dist)
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def triangle_distance(g: Graph, first: Sequence[int], second: Sequence[int]) -> float:
    """Shortest distance between any corner of ``first`` and any of ``second``.

    Returns ``math.inf`` when they lie in different components.
    """
    _check_triangle(g, first)
    _check_triangle(g, second)
    dist = bfs_distances(g, first)
    return min((dist[y] for y in second if y in dist), default=math.inf)


def components(g: Graph) -> list[list[int]]:
    """Connected components with at least one edge, each sorted."""
    seen: set[int] = set()
    comps = []
    for v in g.vertices():
        if v in seen or not g.adjacency[v]:
            continue
        comp = sorted(bfs_distances(g, [v]))
        seen.update(comp)
        comps.append(comp)
    return comps


def is_connected_ignoring_isolated(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_eulerian(g: Graph) -> bool:
    if any(g.degree(v) % 2 for v in g.vertices()):
        return False
    return is_connected_ignoring_isolated(g)
