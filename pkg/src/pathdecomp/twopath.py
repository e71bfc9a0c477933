"""Exact search for a partition of a small connected graph into two paths.

The graph is contracted to its branch structure: every maximal chain of
degree-2 vertices becomes one multi-edge between terminals (vertices of
degree other than 2). A first path ``P1`` is then enumerated as a sequence
of distinct terminals joined by whole chains, optionally trimmed by a
partial chain at each end. Since the complement of ``P1`` must have maximum
degree 2, every vertex of degree 3 or more lies on ``P1`` and those of
degree 4 are interior to it, which keeps the enumeration tiny.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import PreconditionViolated, TooManyBranchVertices
from .graph import Edge, edge_key

MAX_BRANCH_VERTICES = 7


@dataclass(frozen=True)
class Contraction:
    """Branch structure of a graph.

    ``chains[i]`` is a vertex sequence from one terminal to another (the
    same terminal for a pendant cycle) whose interior vertices have degree 2.
    """

    terminals: tuple[int, ...]
    branch: tuple[int, ...]
    chains: tuple[tuple[int, ...], ...]
    degree: dict


def _adjacency(edges: Iterable[Edge]) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = defaultdict(set)
    for u, v in edges:
        if u == v:
            raise PreconditionViolated(f"loop at {u}")
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _connected(adj: dict[int, set[int]]) -> bool:
    if not adj:
        return True
    start = min(adj)
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in adj[x]:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(adj)


def contract_chains(edges: Iterable[Edge]) -> Contraction:
    adj = _adjacency(edges)
    degree = {v: len(nb) for v, nb in adj.items()}
    terminals = tuple(sorted(v for v, d in degree.items() if d != 2))
    branch = tuple(v for v in terminals if degree[v] >= 3)
    used: set[Edge] = set()
    chains = []
    for t in terminals:
        for first in sorted(adj[t]):
            if edge_key(t, first) in used:
                continue
            chain = [t, first]
            used.add(edge_key(t, first))
            while degree[chain[-1]] == 2:
                a, b = adj[chain[-1]]
                nxt = b if a == chain[-2] else a
                used.add(edge_key(chain[-1], nxt))
                chain.append(nxt)
            chains.append(tuple(chain))
    return Contraction(terminals, branch, tuple(chains), degree)


def _is_single_path(edges: set[Edge]) -> bool:
    if not edges:
        return False
    adj = _adjacency(edges)
    if any(len(nb) > 2 for nb in adj.values()):
        return False
    return len(adj) == len(edges) + 1 and _connected(adj)


def _order_path(edges: set[Edge]) -> tuple[int, ...]:
    adj = _adjacency(edges)
    start = min(v for v, nb in adj.items() if len(nb) == 1)
    seq = [start]
    prev = None
    while True:
        nxt = [w for w in adj[seq[-1]] if w != prev]
        if not nxt:
            break
        prev = seq[-1]
        seq.append(nxt[0])
    return tuple(seq)


def _canonical(path: tuple[int, ...]) -> tuple[int, ...]:
    return path if path[0] <= path[-1] else path[::-1]


def _stubs(con: Contraction) -> dict[int, list[tuple[int, tuple[int, ...]]]]:
    """For each terminal, the chains leaving it as ``(chain id, vertices from it)``."""
    stubs: dict[int, list] = defaultdict(list)
    for cid, chain in enumerate(con.chains):
        stubs[chain[0]].append((cid, chain))
        stubs[chain[-1]].append((cid, chain[::-1]))
    return stubs


def _candidate_first_paths(con: Contraction) -> Iterator[tuple[int, ...]]:
    stubs = _stubs(con)
    branch = set(con.branch)
    need_interior = {v for v in branch if con.degree[v] >= 4}

    def partials(t, banned_chain_ids):
        # (chain id, side-oriented vertices, number of edges taken)
        for cid, verts in stubs[t]:
            if cid in banned_chain_ids:
                continue
            for j in range(1, len(verts) - 1):
                yield cid, verts, j

    def _extend_body(body, used_chains, visited):
        # visited holds the terminals on body
        if branch <= visited:
            yield from finish_body(body, used_chains)
        last = body[-1]
        for cid, verts in stubs[last]:
            nxt = verts[-1]
            if cid in used_chains or nxt in visited:
                continue
            used_chains.add(cid)
            visited.add(nxt)
            yield from _extend_body(body + list(verts[1:]), used_chains, visited)
            visited.discard(nxt)
            used_chains.discard(cid)

    def finish_body(body, used_chains):
        body = tuple(body)
        u0, ur = body[0], body[-1]
        single = len(body) == 1
        terminal_interior = {v for v in body[1:-1] if v in branch}
        for sp in [None] + list(partials(u0, used_chains)):
            for ep in [None] + list(partials(ur, used_chains)):
                if single and sp is None and ep is None:
                    continue
                if sp is not None and ep is not None and sp[0] == ep[0]:
                    if sp[1] == ep[1]:
                        continue
                    if sp[2] + ep[2] >= len(sp[1]) - 1:
                        continue
                interior = set(terminal_interior)
                if not single:
                    if sp is not None:
                        interior.add(u0)
                    if ep is not None:
                        interior.add(ur)
                elif sp is not None and ep is not None:
                    interior.add(u0)
                if not need_interior <= interior:
                    continue
                head = tuple(reversed(sp[1][1 : sp[2] + 1])) if sp else ()
                tail = tuple(ep[1][1 : ep[2] + 1]) if ep else ()
                yield head + body + tail

    for t in con.terminals:
        yield from _extend_body([t], set(), {t})

    if not branch:
        # paths avoiding every terminal: strictly inside one chain
        for chain in con.chains:
            for a in range(1, len(chain) - 2):
                for b in range(a + 1, len(chain) - 1):
                    yield tuple(chain[a : b + 1])


def contracted_two_path_search(edges: Iterable[Edge]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two paths partitioning ``edges``, or ``None`` when no such pair exists.

    Raises ``TooManyBranchVertices`` beyond seven vertices of degree >= 3.
    """
    edge_set = {edge_key(*e) for e in edges}
    adj = _adjacency(edge_set)
    if not _connected(adj):
        raise PreconditionViolated("graph is not connected")
    if not edge_set:
        return None
    con = contract_chains(edge_set)
    if len(con.branch) > MAX_BRANCH_VERTICES:
        raise TooManyBranchVertices(f"{len(con.branch)} branch vertices (limit {MAX_BRANCH_VERTICES})")
    odd = sum(1 for d in con.degree.values() if d % 2)
    if odd > 4 or any(d > 4 for d in con.degree.values()):
        return None

    if not con.terminals:
        # a lone cycle: cut it at its smallest vertex and that vertex's smaller neighbour
        cyc = _cycle_order(adj)
        return (cyc[0], cyc[1]), tuple(cyc[1:]) + (cyc[0],)

    candidates = {_canonical(p) for p in _candidate_first_paths(con)}
    for first in sorted(candidates, key=lambda p: (-len(p), p)):
        rest = edge_set.difference(edge_key(first[i], first[i + 1]) for i in range(len(first) - 1))
        if _is_single_path(rest):
            return first, _canonical(_order_path(rest))
    return None


def _cycle_order(adj: dict[int, set[int]]) -> list[int]:
    start = min(adj)
    seq = [start, min(adj[start])]
    while True:
        a, b = adj[seq[-1]]
        nxt = b if a == seq[-2] else a
        if nxt == start:
            return seq
        seq.append(nxt)
