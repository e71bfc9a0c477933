"""Minimum path decompositions: exact branch and bound, and a seeded heuristic.

The exact search always places the smallest uncovered edge next. It
enumerates every simple path through that edge (both ends grown by
depth-first search, longest first), so each decomposition is reached in
exactly one order. A state is pruned when the paths used so far plus a
lower bound for the remaining edges cannot beat the incumbent, or when the
same remaining edge set was already reached with no more paths.
"""

from __future__ import annotations

import logging
import random
import time
from dataclasses import dataclass

from .decomposition import CFZ_ALPHA_BETA, Decomposition, PathSeq, allowed_paths, verify_paths
from .errors import BudgetTooSmall, NotTriangleFree, OracleBoundMiss, PreconditionViolated
from .graph import Graph, is_triangle_free

log = logging.getLogger(__name__)

EXACT_EDGE_CAP = 24
DEFAULT_RESTARTS = 50


@dataclass(frozen=True)
class SolverBudget:
    max_nodes: int = 2_000_000
    time_limit_ms: int = 60_000

    def __post_init__(self):
        if self.max_nodes <= 0 or self.time_limit_ms <= 0:
            raise ValueError("budget limits must be positive")


class _Exhausted(Exception):
    pass


class _ExactSearch:
    def __init__(self, g: Graph, budget: SolverBudget):
        self.g = g
        self.budget = budget
        self.edges = g.edges()
        self.index = {e: i for i, e in enumerate(self.edges)}
        # incident (neighbour, edge bit) per vertex
        self.inc = [[] for _ in range(g.n)]
        for i, (u, v) in enumerate(self.edges):
            self.inc[u].append((v, 1 << i))
            self.inc[v].append((u, 1 << i))
        self.nodes = 0
        self.deadline = time.monotonic() + budget.time_limit_ms / 1000
        self.seen: dict[int, int] = {}
        self.best: list[PathSeq] | None = None

    def _tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _Exhausted
        if self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise _Exhausted

    def lower_bound(self, mask: int) -> int:
        """Per-component bound, summed over components.

        A component needs at least half its odd vertices, half its largest
        degree (a path uses at most two edges at a vertex) and
        ``m_c / (n_c - 1)`` paths, all rounded up.
        """
        parent: dict[int, int] = {}

        def find(x):
            while parent.setdefault(x, x) != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        deg: dict[int, int] = {}
        m = mask
        while m:
            low = m & -m
            u, v = self.edges[low.bit_length() - 1]
            deg[u] = deg.get(u, 0) + 1
            deg[v] = deg.get(v, 0) + 1
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
            m ^= low
        comp: dict[int, list[int]] = {}
        for v, d in deg.items():
            c = comp.setdefault(find(v), [0, 0, 0, 0])
            c[0] += d & 1
            c[1] = max(c[1], d)
            c[2] += d
            c[3] += 1
        total = 0
        for odd, top, degsum, size in comp.values():
            edges = degsum // 2
            total += max(1, odd // 2, -(-top // 2), -(-edges // (size - 1)))
        return total

    def _grow(self, end: int, mask: int, visited: set[int]):
        """Every simple extension beyond ``end`` inside ``mask``: (vertices, used bits)."""
        yield (), 0
        for w, bit in self.inc[end]:
            if mask & bit and w not in visited:
                visited.add(w)
                for tail, bits in self._grow(w, mask & ~bit, visited):
                    yield (w,) + tail, bits | bit
                visited.discard(w)

    def paths_through_lowest(self, mask: int) -> list[tuple[PathSeq, int]]:
        low = mask & -mask
        a, b = self.edges[low.bit_length() - 1]
        rest = mask & ~low
        out = []
        visited = {a, b}
        for right, rbits in self._grow(b, rest, visited):
            vis2 = visited | set(right)
            for left, lbits in self._grow(a, rest & ~rbits, vis2):
                out.append((tuple(reversed(left)) + (a, b) + right, low | rbits | lbits))
        out.sort(key=lambda item: (-len(item[0]), item[0]))
        return out

    def search(self, mask: int, chosen: list[PathSeq]):
        self._tick()
        if mask == 0:
            if self.best is None or len(chosen) < len(self.best):
                self.best = list(chosen)
            return
        used = len(chosen)
        if self.best is not None and used + self.lower_bound(mask) >= len(self.best):
            return
        prev = self.seen.get(mask)
        if prev is not None and prev <= used:
            return
        self.seen[mask] = used
        for path, bits in self.paths_through_lowest(mask):
            chosen.append(path)
            self.search(mask & ~bits, chosen)
            chosen.pop()
            if self.best is not None and used + self.lower_bound(mask) >= len(self.best):
                return


def exact_min_decomposition(
    g: Graph,
    budget: SolverBudget | None = None,
    edge_cap: int = EXACT_EDGE_CAP,
    incumbent: list[PathSeq] | None = None,
) -> tuple[Decomposition, bool]:
    """Minimum path decomposition of ``g`` by branch and bound.

    Returns ``(decomposition, optimal)``; ``optimal`` is False when the
    budget ran out first, in which case the best decomposition seen is
    returned (at worst the supplied incumbent or one path per edge).
    """
    if g.m > edge_cap:
        raise PreconditionViolated(f"exact search is capped at {edge_cap} edges, graph has {g.m}")
    budget = budget or SolverBudget()
    search = _ExactSearch(g, budget)
    start = [(u, v) for u, v in search.edges]
    if incumbent is not None and verify_paths(g, incumbent).ok:
        start_paths = [tuple(p) for p in incumbent if len(p) > 1]
        if len(start_paths) < len(start):
            start = start_paths
    # the incumbent only bounds the search; strictly better ones replace it
    search.best = [tuple(p) for p in start]
    optimal = True
    try:
        search.search((1 << len(search.edges)) - 1, [])
    except _Exhausted:
        optimal = False
    if search.best is None:
        raise BudgetTooSmall("no decomposition found within budget")
    return Decomposition(g, list(search.best)), optimal


def exact_path_number(g: Graph, budget: SolverBudget | None = None) -> int:
    d, optimal = exact_min_decomposition(g, budget)
    if not optimal:
        raise BudgetTooSmall("exact search did not finish")
    return len(d)


# ---------------------------------------------------------------------------
# heuristic


def _remove_path(adj: list[set[int]], path: PathSeq) -> None:
    for a, b in zip(path, path[1:]):
        adj[a].discard(b)
        adj[b].discard(a)


def _random_long_path(adj: list[set[int]], rng: random.Random, tries: int) -> PathSeq:
    """Longest of several randomized greedy walks grown at both ends."""
    live = [v for v in range(len(adj)) if adj[v]]
    odd = [v for v in live if len(adj[v]) % 2]
    best: PathSeq = ()
    for _ in range(tries):
        start = rng.choice(odd) if odd and rng.random() < 0.7 else rng.choice(live)
        seq = [start]
        on = {start}
        for grow_front in (False, True):
            while True:
                end = seq[0] if grow_front else seq[-1]
                opts = [w for w in adj[end] if w not in on]
                if not opts:
                    break
                # prefer low remaining degree so hubs stay available as interiors
                rng.shuffle(opts)
                opts.sort(key=lambda w: len(adj[w] - on))
                w = opts[0] if rng.random() < 0.8 else rng.choice(opts)
                on.add(w)
                if grow_front:
                    seq.insert(0, w)
                else:
                    seq.append(w)
        if len(seq) > len(best):
            best = tuple(seq)
    return best


def _peel_longest(g: Graph, rng: random.Random, tries: int = 8) -> list[PathSeq]:
    adj = [set(nb) for nb in g.adjacency]
    paths = []
    while any(adj):
        p = _random_long_path(adj, rng, tries)
        _remove_path(adj, p)
        paths.append(p)
    return paths


def _euler_split(g: Graph, rng: random.Random) -> list[PathSeq]:
    """Trails from an Euler tour (odd vertices paired through a dummy), cut into paths."""
    n = g.n
    dummy = n
    adj = [list(nb) for nb in g.adjacency] + [[]]
    for v in range(n):
        if len(adj[v]) % 2:
            adj[v].append(dummy)
            adj[dummy].append(v)
    for lst in adj:
        rng.shuffle(lst)
    remaining = [dict() for _ in range(n + 1)]
    for v in range(n + 1):
        for w in adj[v]:
            remaining[v][w] = remaining[v].get(w, 0) + 1
    paths: list[PathSeq] = []
    starts = ([dummy] if adj[dummy] else []) + [v for v in range(n) if adj[v]]
    for s in starts:
        if not remaining[s]:
            continue
        # Hierholzer
        stack, circuit = [s], []
        while stack:
            v = stack[-1]
            if remaining[v]:
                w = next(iter(remaining[v]))
                for a, b in ((v, w), (w, v)):
                    remaining[a][b] -= 1
                    if not remaining[a][b]:
                        del remaining[a][b]
                stack.append(w)
            else:
                circuit.append(stack.pop())
        trail: list[int] = []
        for v in circuit:
            if v == dummy:
                paths.extend(_cut_trail(trail))
                trail = []
            else:
                trail.append(v)
        paths.extend(_cut_trail(trail))
    return [p for p in paths if len(p) > 1]


def _cut_trail(trail: list[int]) -> list[PathSeq]:
    out = []
    cur: list[int] = []
    on: set[int] = set()
    for v in trail:
        if v in on:
            out.append(tuple(cur))
            cur = [cur[-1]]
            on = {cur[-1]}
        cur.append(v)
        on.add(v)
    if len(cur) > 1:
        out.append(tuple(cur))
    return out


def merge_paths(paths: list[PathSeq]) -> list[PathSeq]:
    """Join pairs of paths that share an end vertex and nothing else, until none remain."""
    paths = [tuple(p) for p in paths if len(p) > 1]
    changed = True
    while changed:
        changed = False
        by_end: dict[int, list[int]] = {}
        for i, p in enumerate(paths):
            by_end.setdefault(p[0], []).append(i)
            by_end.setdefault(p[-1], []).append(i)
        for v, idxs in sorted(by_end.items()):
            for a_pos, i in enumerate(idxs):
                for j in idxs[a_pos + 1 :]:
                    if i == j:
                        continue
                    p, q = paths[i], paths[j]
                    if len(set(p) & set(q)) != 1:
                        continue
                    p = p if p[-1] == v else p[::-1]
                    q = q if q[0] == v else q[::-1]
                    paths[i] = p + q[1:]
                    del paths[j]
                    changed = True
                    break
                if changed:
                    break
            if changed:
                break
    return paths


def heuristic_decomposition(g: Graph, seed: int = 0, restarts: int = DEFAULT_RESTARTS, target: int | None = None) -> list[PathSeq]:
    """Best of ``restarts`` randomized peel-and-merge runs; stops early at ``target``."""
    rng = random.Random(seed)
    best: list[PathSeq] | None = None
    if g.m == 0:
        return []
    for r in range(restarts):
        raw = _peel_longest(g, rng) if r % 2 == 0 else _euler_split(g, rng)
        cand = merge_paths(raw)
        if best is None or len(cand) < len(best):
            best = cand
        if target is not None and len(best) <= target:
            break
    return best


def decompose_triangle_free(
    g: Graph,
    budget: SolverBudget | None = None,
    seed: int = 0,
    restarts: int = DEFAULT_RESTARTS,
    edge_cap: int = EXACT_EDGE_CAP,
) -> Decomposition:
    """A decomposition of a triangle-free graph within ``alpha/2 + floor(3 beta/5)`` paths."""
    if not is_triangle_free(g):
        raise NotTriangleFree("graph contains a triangle")
    allowed = allowed_paths(g, CFZ_ALPHA_BETA)
    paths = heuristic_decomposition(g, seed=seed, restarts=restarts, target=allowed)
    if len(paths) > allowed and g.m <= edge_cap:
        log.info("heuristic found %d > %d paths; falling back to exact search", len(paths), allowed)
        d, _ = exact_min_decomposition(g, budget, edge_cap, incumbent=paths)
        paths = d.paths
    if len(paths) > allowed:
        raise OracleBoundMiss(f"best decomposition has {len(paths)} paths, bound allows {allowed}")
    report = verify_paths(g, paths)
    assert report.ok, report.violations
    return Decomposition(g, list(paths))
