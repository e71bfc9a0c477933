"""Constructive path/cycle merging and flower decomposition.

* ``two_path_merge``: a path plus an edge-disjoint cycle meeting it in at
  most five vertices splits into two paths, except for the exceptional
  configuration (a 5-cycle whose five vertices are all on the path, the
  path supplying four chords of ``K5`` minus one edge).
* ``merge_path_with_cycles``: a path on at most four vertices plus cycles
  touching it, ``|V(P)| + #cycles <= 6``, splits into ``#cycles + 1`` paths.
* ``decompose_flower``: up to six edge-disjoint cycles through a common
  vertex split into ``#cycles + 1`` paths.
* ``decompose_flower_bundle``: any number of such cycles, six at a time.

Ties are always broken towards the smallest vertex label or cycle index.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from .decomposition import (
    CycleSeq,
    PathSeq,
    cycle_edges,
    cycle_neighbors,
    cycle_path,
    path_edges,
    verify_fragment,
)
from .errors import PreconditionViolated
from .twopath import contracted_two_path_search

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ExceptionalGraph:
    """Marker returned when a path and a cycle admit no two-path split."""

    path: PathSeq
    cycle: CycleSeq


@dataclass(frozen=True)
class Flower:
    cycles: tuple[CycleSeq, ...]
    hub: int


@dataclass(frozen=True)
class MergeInstance:
    path: PathSeq
    cycles: tuple[CycleSeq, ...]


def _check_cycle(c: Sequence[int]) -> None:
    if len(c) < 3 or len(set(c)) != len(c):
        raise PreconditionViolated(f"{tuple(c)} is not a cycle")


def _check_edge_disjoint(groups: Sequence[Sequence[tuple[int, int]]]) -> None:
    seen: set = set()
    for g in groups:
        for e in g:
            if e in seen:
                raise PreconditionViolated(f"edge {e} is shared")
            seen.add(e)


def _check_path(p: Sequence[int]) -> None:
    if len(p) == 0 or len(set(p)) != len(p):
        raise PreconditionViolated(f"{tuple(p)} is not a path")


def two_path_merge(path: Sequence[int], cycle: Sequence[int]) -> tuple[PathSeq, PathSeq] | ExceptionalGraph:
    """Split ``path`` + ``cycle`` into two paths, or report the exceptional graph."""
    path, cycle = tuple(path), tuple(cycle)
    _check_path(path)
    _check_cycle(cycle)
    pe, ce = path_edges(path), cycle_edges(cycle)
    _check_edge_disjoint([pe, ce])
    shared = set(path) & set(cycle)
    if not shared:
        raise PreconditionViolated("path and cycle are disjoint")
    if len(shared) > 5:
        raise PreconditionViolated(f"path meets the cycle in {len(shared)} > 5 vertices")
    if len(shared) == 1 and (path[0] in shared or path[-1] in shared):
        # pendant path: walk on around the cycle, leaving one cycle edge
        x = path[-1] if path[-1] in shared else path[0]
        lead = path if path[-1] == x else path[::-1]
        y = cycle_neighbors(cycle, x)[1]
        return lead + cycle_path(cycle, x, y)[1:], (y, x)
    found = contracted_two_path_search(pe + ce)
    if found is None:
        return ExceptionalGraph(path, cycle)
    return found


def _two_paths_or_fail(path: PathSeq, cycle: CycleSeq) -> tuple[PathSeq, PathSeq]:
    res = two_path_merge(path, cycle)
    if isinstance(res, ExceptionalGraph):
        raise AssertionError(f"unexpected exceptional graph: path {path}, cycle {cycle}")
    return res


def merge_path_with_cycles(inst: MergeInstance | None = None, *, path=None, cycles=None) -> list[PathSeq]:
    """Decompose ``E(path) + E(cycles)`` into exactly ``len(cycles) + 1`` paths.

    Runs the induction on the number of cycles: the first path vertex lying
    on some cycle trades the path's prefix for one cycle edge, producing a
    finished path and a shorter instance.
    """
    if inst is not None:
        path, cycles = inst.path, inst.cycles
    path = tuple(path)
    cycles = [tuple(c) for c in cycles]
    _check_path(path)
    for c in cycles:
        _check_cycle(c)
        if not set(c) & set(path):
            raise PreconditionViolated(f"cycle {c} misses the path")
    _check_edge_disjoint([path_edges(path)] + [cycle_edges(c) for c in cycles])
    if len(path) > 4 or len(path) + len(cycles) > 6:
        raise PreconditionViolated(f"|V(P)|={len(path)}, {len(cycles)} cycles: outside the supported envelope")
    result = _merge(path, cycles)
    assert len(result) == len(cycles) + 1
    return result


def _merge(path: PathSeq, cycles: list[CycleSeq]) -> list[PathSeq]:
    if not cycles:
        return [path]
    if len(cycles) == 1:
        return list(_two_paths_or_fail(path, cycles[0]))

    on_cycles = set().union(*cycles)
    i = next(idx for idx, v in enumerate(path) if v in on_cycles)
    vi = path[i]
    c1_idx = next(idx for idx, c in enumerate(cycles) if vi in c)
    c1 = cycles[c1_idx]
    rest = cycles[:c1_idx] + cycles[c1_idx + 1 :]
    x1, x2 = cycle_neighbors(c1, vi)
    path_set = set(path)

    outside = [x for x in (x1, x2) if x not in path_set]
    if outside:
        x = outside[0]
        new_path = (x,) + path[i:]
        # v1..vi then around c1 from vi, ending at x
        finished = path[:i] + cycle_path(c1, vi, x)
        if len(new_path) <= 4:
            return [finished] + _merge(new_path, rest)
        # |V(P')| = 5: only possible with a 4-vertex path, i = 0 and two cycles
        assert len(path) == 4 and i == 0 and len(cycles) == 2
        c2 = rest[0]
        res = two_path_merge(new_path, c2)
        if isinstance(res, ExceptionalGraph):
            other = x2 if x == x1 else x1
            assert other not in path_set, "exceptional case with both neighbours on the path"
            log.debug("exceptional graph at %s; rerouting through %s", new_path, other)
            new_path = (other,) + path
            finished = cycle_path(c1, vi, other)
            res = _two_paths_or_fail(new_path, c2)
        return [finished, *res]

    # both cycle neighbours of v1 lie on P = v1 v2 v3 v4, hence are v3 and v4
    assert len(path) == 4 and i == 0 and len(cycles) == 2 and {x1, x2} == {path[2], path[3]}
    v1, v2, v3, v4 = path
    a, b = cycle_neighbors(c1, v3)
    x = b if a == v1 else a
    assert x not in path_set
    rerouted = (x, v3, v2, v1, v4)
    # c1 without x-v3 and v1-v4 is two paths x..v4 and v3-v1; join them with v3-v4
    around = cycle_path(c1, x, v3)  # x ... v4 v1 v3
    assert around[-3:] == (v4, v1, v3)
    finished = around[:-2] + (v3, v1)
    return [finished, *_two_paths_or_fail(rerouted, rest[0])]


def decompose_flower(flower: Flower | None = None, *, cycles=None, hub=None) -> list[PathSeq]:
    """Decompose at most six edge-disjoint cycles through ``hub`` into ``#cycles + 1`` paths."""
    if flower is not None:
        cycles, hub = flower.cycles, flower.hub
    cycles = [tuple(c) for c in cycles]
    if not 1 <= len(cycles) <= 6:
        raise PreconditionViolated(f"flower needs 1..6 cycles, got {len(cycles)}")
    _check_flower(cycles, hub)
    if len(cycles) <= 5:
        result = _merge((hub,), cycles)
    else:
        result = _six_cycles(cycles, hub)
    report = verify_fragment([e for c in cycles for e in cycle_edges(c)], result)
    assert report.ok and len(result) == len(cycles) + 1, report.violations
    return result


def _check_flower(cycles: Sequence[CycleSeq], hub: int) -> None:
    for c in cycles:
        _check_cycle(c)
        if hub not in c:
            raise PreconditionViolated(f"hub {hub} is not on cycle {c}")
    _check_edge_disjoint([cycle_edges(c) for c in cycles])


def _six_cycles(cycles: list[CycleSeq], hub: int) -> list[PathSeq]:
    vsets = [set(c) for c in cycles]
    common = sorted(set.intersection(*vsets))
    # a vertex on every cycle with a neighbour on C_i that is off C_j
    for v in common:
        for i, ci in enumerate(cycles):
            for u in cycle_neighbors(ci, v):
                for j, cj in enumerate(cycles):
                    if j == i or u in vsets[j]:
                        continue
                    z = cycle_neighbors(cj, v)[0]
                    first = (u,) + cycle_path(cj, v, z)
                    second = cycle_path(ci, v, u)
                    rest = [c for k, c in enumerate(cycles) if k not in (i, j)]
                    return [first, second, *_merge((z, v), rest)]
    # every cycle has the same vertex set
    return _six_equal_cycles(cycles, hub)


def _six_equal_cycles(cycles: list[CycleSeq], hub: int) -> list[PathSeq]:
    C = list(cycles)

    def nbrs(k: int, v: int) -> tuple[int, int]:
        return cycle_neighbors(C[k], v)

    v1 = hub
    v2 = nbrs(0, v1)[0]
    v3 = nbrs(1, v2)[0]
    v4 = min(set(nbrs(2, v3)) - {v1})
    # v5 along one of C4..C6, which is then moved to position 4
    v5, k5 = min((w, k) for k in (3, 4, 5) for w in nbrs(k, v4) if w not in (v1, v2))
    C[3], C[k5] = C[k5], C[3]
    v6, k6 = min((w, k) for k in (4, 5) for w in nbrs(k, v5) if w not in (v1, v2, v3))
    C[4], C[k6] = C[k6], C[4]
    vs = [v1, v2, v3, v4, v5, v6]
    xs = nbrs(5, v6)
    ys = nbrs(5, v1)

    def spoke(k: int, a: int, b: int) -> PathSeq:
        return cycle_path(C[k], a, b)

    def walk_rest(skip: int | None = None) -> list[PathSeq]:
        # C_k minus v_k v_{k+1} for the first five cycles, except index skip
        return [spoke(k, vs[k], vs[k + 1]) for k in range(5) if k != skip]

    for x in xs:
        if x not in vs[:4]:
            return [tuple(vs) + (x,), spoke(5, v6, x), *walk_rest()]
    for y in ys:
        if y not in vs[2:]:
            return [(y,) + tuple(vs), spoke(5, v1, y), *walk_rest()]

    ring = set(vs)
    if v6 in ys:
        # v1..v6 closes into a 6-cycle; some v_i has a cycle neighbour off it
        for i in range(1, 5):
            prev_nb = min(set(nbrs(i - 1, vs[i])) - {vs[i - 1]})
            next_nb = min(set(nbrs(i, vs[i])) - {vs[i + 1]})
            if prev_nb not in ring:
                # ring minus v_{i-1} v_i, plus the pendant edge v_i prev_nb
                body = (prev_nb,) + tuple(vs[i:]) + tuple(vs[:i])
                pieces = [body, spoke(i - 1, vs[i], prev_nb), spoke(5, v1, v6)]
                pieces += walk_rest(skip=i - 1)
                return pieces
            if next_nb not in ring:
                body = (next_nb,) + tuple(reversed(vs[: i + 1])) + tuple(reversed(vs[i + 1 :]))
                pieces = [body, spoke(i, vs[i], next_nb), spoke(5, v1, v6)]
                pieces += walk_rest(skip=i)
                return pieces
        raise AssertionError("6-cycle with more than nine chords")

    # {y1, y2} within {v3, v4, v5} and {x1, x2} within {v2, v3, v4}
    si, sj = sorted(vs.index(y) for y in ys)
    w_opts = [
        (w, s)
        for s in (si, sj)
        for w in nbrs(s - 1, v6)
        if w not in vs[:4]
    ]
    w, s = min(w_opts)
    body = (w,) + tuple(reversed(vs[s:])) + tuple(vs[:s])
    pieces = [body, spoke(s - 1, w, v6), spoke(5, v1, vs[s])]
    pieces += walk_rest(skip=s - 1)
    return pieces


def bundle_size(q: int) -> int:
    """Number of paths the six-at-a-time grouping yields for ``q`` cycles."""
    if q < 1:
        raise ValueError("q must be positive")
    full, delta = divmod(q, 6)
    return 7 * full + (delta + 1 if delta else 0)


def decompose_flower_bundle(flower: Flower | None = None, *, cycles=None, hub=None) -> list[PathSeq]:
    """Decompose any number of cycles through ``hub`` into ``bundle_size(q)`` paths.

    Cycles are grouped six at a time in input order; the remainder goes last.
    """
    if flower is not None:
        cycles, hub = flower.cycles, flower.hub
    cycles = [tuple(c) for c in cycles]
    if not cycles:
        raise PreconditionViolated("flower has no cycles")
    _check_flower(cycles, hub)
    result: list[PathSeq] = []
    for start in range(0, len(cycles), 6):
        result.extend(decompose_flower(cycles=cycles[start : start + 6], hub=hub))
    assert len(result) == bundle_size(len(cycles))
    return result
