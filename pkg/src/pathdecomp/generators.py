"""Seeded instance generators.

Every generated graph is re-checked against its family's promises before it
is returned; a failed check raises instead of handing back a bad instance.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .decomposition import CycleSeq, PathSeq, cycle_edges, path_edges
from .errors import InfeasibleSpec
from .graph import Graph, build_graph, edge_key, enumerate_triangles, is_eulerian, is_triangle_free, triangle_distance
from .lemmas import MergeInstance

MAX_ATTEMPTS = 10_000

FAMILIES = ("disjoint_triangles", "flower", "spaced_triangle_eulerian", "triangle_free_eulerian")


@dataclass(frozen=True)
class GenSpec:
    family: str
    params: dict = field(default_factory=dict)
    seed: int = 0

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise InfeasibleSpec(f"unknown family {self.family!r}")
        for key, val in self.params.items():
            vals = val if isinstance(val, (list, tuple)) else [val]
            if any(int(x) <= 0 for x in vals):
                raise InfeasibleSpec(f"parameter {key} must be positive")


def generate(spec: GenSpec) -> Graph:
    rng = random.Random(spec.seed)
    p = spec.params
    if spec.family == "disjoint_triangles":
        g = disjoint_triangles(int(p.get("k", 1)))
    elif spec.family == "flower":
        q = int(p.get("q", 1))
        lengths = p.get("lengths", 3)
        lengths = [int(lengths)] * q if isinstance(lengths, (int, str)) else [int(x) for x in lengths]
        if len(lengths) == 1:
            lengths *= q
        if len(lengths) != q:
            raise InfeasibleSpec(f"{len(lengths)} cycle lengths given for q={q}")
        g = flower(lengths)
    elif spec.family == "spaced_triangle_eulerian":
        g = spaced_triangle_eulerian(int(p.get("n", 11)), int(p.get("t", 1)), rng)
    else:
        g = triangle_free_eulerian(int(p.get("n", 8)), rng)
    return g


def disjoint_triangles(k: int) -> Graph:
    edges = [(3 * i + a, 3 * i + b) for i in range(k) for a, b in ((0, 1), (1, 2), (0, 2))]
    g = build_graph(edges, 3 * k)
    assert len(enumerate_triangles(g)) == k
    return g


def flower(lengths: list[int]) -> Graph:
    """Cycles of the given lengths sharing only the hub vertex 0."""
    if any(L < 3 for L in lengths):
        raise InfeasibleSpec("cycle lengths must be at least 3")
    edges = []
    nxt = 1
    for L in lengths:
        ring = [0] + list(range(nxt, nxt + L - 1))
        nxt += L - 1
        edges.extend(cycle_edges(ring))
    g = build_graph(edges, nxt)
    assert g.degree(0) == 2 * len(lengths)
    return g


def _plant_gaps(L: int, t: int, rng: random.Random) -> list[int]:
    extra = L - 4 * t
    cuts = sorted(rng.randint(0, extra) for _ in range(t - 1))
    parts = [b - a for a, b in zip([0] + cuts, cuts + [extra])]
    return [4 + x for x in parts]


def _spacing_ok(g: Graph, t: int) -> bool:
    tris = enumerate_triangles(g)
    if len(tris) != t:
        return False
    return all(triangle_distance(g, a, b) >= 3 for a, b in itertools.combinations(tris, 2))


def _add_chord_cycles(edges: set, n: int, rounds: int, rng: random.Random, accept) -> None:
    """Add up to ``rounds`` random cycles of fresh edges, each kept only if ``accept`` approves.

    Best effort: gives up quietly after ``MAX_ATTEMPTS`` draws, since small
    graphs may have no room for another acceptable cycle.
    """
    added = 0
    for _ in range(MAX_ATTEMPTS):
        if added >= rounds:
            return
        L = rng.randint(4, 6)
        if L > n:
            return
        ring = rng.sample(range(n), L)
        new = set(cycle_edges(ring))
        if new & edges:
            continue
        trial = edges | new
        if accept(Graph.from_edge_set(trial, n)):
            edges |= new
            added += 1


def spaced_triangle_eulerian(n: int, t: int, rng: random.Random) -> Graph:
    """Eulerian graph with exactly ``t`` triangles pairwise at distance >= 3.

    Triangles hang off a long cycle with at least four cycle edges between
    plants; extra edge-disjoint chord cycles follow, rejected whenever they
    create a triangle or bring two triangles closer than 3.
    """
    L = n - 2 * t
    if t < 1 or L < max(4, 4 * t):
        raise InfeasibleSpec(f"cannot space {t} triangles on {n} vertices (need n >= {2 * t + max(4, 4 * t)})")
    gaps = _plant_gaps(L, t, rng)
    offset = rng.randrange(L)
    plants = []
    pos = offset
    for gsize in gaps:
        plants.append(pos % L)
        pos += gsize
    edges = set(cycle_edges(list(range(L))))
    extra = L
    for c in plants:
        x, y = extra, extra + 1
        extra += 2
        edges |= {edge_key(c, x), edge_key(x, y), edge_key(c, y)}
    rounds = rng.randint(0, n // 12)
    _add_chord_cycles(edges, n, rounds, rng, lambda h: _spacing_ok(h, t))
    g = _relabelled(edges, n, rng)
    if not (is_eulerian(g) and _spacing_ok(g, t)):
        raise InfeasibleSpec("generated graph failed its family checks")
    return g


def triangle_free_eulerian(n: int, rng: random.Random) -> Graph:
    if n < 4:
        raise InfeasibleSpec("a triangle-free Eulerian graph with edges needs n >= 4")
    order = list(range(n))
    rng.shuffle(order)
    edges = set(cycle_edges(order))
    _add_chord_cycles(edges, n, rng.randint(0, n // 4), rng, is_triangle_free)
    g = Graph.from_edge_set(edges, n)
    if not (is_eulerian(g) and is_triangle_free(g)):
        raise InfeasibleSpec("generated graph failed its family checks")
    return g


def _relabelled(edges, n: int, rng: random.Random) -> Graph:
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edge_set([edge_key(perm[u], perm[v]) for u, v in edges], n)


def random_merge_instance(
    rng: random.Random,
    path_sizes=(1, 2, 3, 4),
    max_cycles: int = 5,
    lengths=(3, 8),
) -> MergeInstance:
    """A random path on <= 4 vertices with edge-disjoint cycles each touching it."""
    while True:
        k = rng.choice(path_sizes)
        q = rng.randint(0, min(max_cycles, 6 - k))
        pool = range(k + 4 * q + 3)
        path: PathSeq = tuple(rng.sample(pool, k))
        used = set(path_edges(path))
        cycles: list[CycleSeq] = []
        for _ in range(q):
            for _ in range(200):
                L = rng.randint(*lengths)
                anchor = rng.choice(path)
                ring: CycleSeq = (anchor,) + tuple(rng.sample([v for v in pool if v != anchor], L - 1))
                ce = set(cycle_edges(ring))
                if not ce & used:
                    used |= ce
                    cycles.append(ring)
                    break
            else:
                break
        if len(cycles) == q:
            return MergeInstance(path, tuple(cycles))
