"""Decomposition into at most 3n/5 paths via a triangle removal set.

A triangle removal set ``R`` is deleted, the triangle-free rest is
decomposed, and the vertices of ``R`` are put back one at a time. Each
neighbour of a returning vertex ``v`` has odd degree in the current graph,
so some path ends there; that path is extended by the edge to ``v``. A path
extended at both ends closes into a cycle through ``v``, and the cycles
through ``v`` are re-split with the flower bundle decomposition.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import asdict, dataclass, field

from .decomposition import (
    CFZ_ALPHA_BETA,
    THREE_FIFTHS_N,
    BoundReport,
    Decomposition,
    PathSeq,
    allowed_paths,
    bound_check,
    verify_paths,
)
from .errors import (
    BoundViolated,
    MissingEndpoint,
    NotEulerian,
    PreconditionViolated,
    RemovalSetNotFound,
    TooSmall,
    TriangleComponent,
    TrianglesTooClose,
)
from .graph import Graph, components, enumerate_triangles, is_eulerian, is_triangle_free, triangle_distance
from .lemmas import bundle_size, decompose_flower_bundle
from .solver import SolverBudget, decompose_triangle_free

log = logging.getLogger(__name__)

EXHAUSTIVE_REMOVAL_CAP = 14


@dataclass(frozen=True)
class TriangleRemovalSet:
    vertices: tuple[int, ...]
    degrees: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.vertices)


@dataclass
class ReattachRecord:
    vertex: int
    degree: int
    cycles: int
    bundle_paths: int
    path_count_before: int
    path_count_after: int


@dataclass
class BoundLedger:
    records: list[ReattachRecord] = field(default_factory=list)
    initial_count: int = 0
    final_count: int = 0
    allowed: int = 0
    seed: int = 0
    labels: tuple | None = None

    @property
    def q_total(self) -> int:
        return sum(r.cycles for r in self.records)

    def to_dict(self) -> dict:
        recs = []
        for r in self.records:
            d = asdict(r)
            if self.labels is not None:
                d["vertex"] = self.labels[r.vertex]
            recs.append(d)
        return {
            "records": recs,
            "initial_count": self.initial_count,
            "final_count": self.final_count,
            "allowed": self.allowed,
            "seed": self.seed,
        }


def removal_set_violations(g: Graph, removed) -> list[str]:
    """Every condition a candidate removal set breaks (empty when valid)."""
    R = list(removed)
    out = []
    if len(set(R)) != len(R):
        out.append("duplicate vertices")
    bad = [v for v in R if not 0 <= v < g.n]
    if bad:
        return out + [f"vertices {bad} not in graph"]
    if not is_triangle_free(g.remove_vertices(R)):
        out.append("G - R contains a triangle")
    low = [v for v in R if g.degree(v) < 4]
    if low:
        out.append(f"(i) degree < 4 at {low}")
    rset = set(R)
    odd = [v for v in g.vertices() if v not in rset and g.degree(v) % 2]
    if odd:
        out.append(f"(ii) odd degree outside R at {odd}")
    for a, b in itertools.combinations(R, 2):
        if (g.neighbors(a) | {a}) & (g.neighbors(b) | {b}):
            out.append(f"(iii) closed neighbourhoods of {a} and {b} intersect")
    return out


def validate_removal_set(g: Graph, removed) -> TriangleRemovalSet | list[str]:
    """The validated set, or the list of violated conditions."""
    R = tuple(removed)
    problems = removal_set_violations(g, R)
    if problems:
        return problems
    return TriangleRemovalSet(R, tuple(g.degree(v) for v in R))


def _greedy_removal_candidates(g: Graph) -> list[int]:
    picks: list[int] = []
    for tri in enumerate_triangles(g):
        best = min(tri, key=lambda v: (-g.degree(v), v))
        if best not in picks:
            picks.append(best)
    return picks


def find_removal_set(g: Graph, exhaustive_cap: int = EXHAUSTIVE_REMOVAL_CAP) -> TriangleRemovalSet | None:
    """Greedy pick per triangle; exhaustive search on small graphs if that fails."""
    found = validate_removal_set(g, _greedy_removal_candidates(g))
    if isinstance(found, TriangleRemovalSet):
        return found
    if g.n > exhaustive_cap:
        return None
    heavy = [v for v in g.vertices() if g.degree(v) >= 4]
    for size in range(len(heavy) + 1):
        for cand in itertools.combinations(heavy, size):
            found = validate_removal_set(g, cand)
            if isinstance(found, TriangleRemovalSet):
                return found
    return None


def reattach(g_partial: Graph, v: int, paths: list[PathSeq], neighbors) -> tuple[list[PathSeq], ReattachRecord]:
    """Put ``v`` back with edges to ``neighbors`` and repair the decomposition.

    ``paths`` must decompose ``g_partial``, in which ``v`` is isolated and
    every neighbour has odd degree. Returns the new paths and the step record.
    """
    nbrs = sorted(neighbors)
    if g_partial.degree(v) != 0:
        raise PreconditionViolated(f"vertex {v} already has edges")
    report = verify_paths(g_partial, paths)
    if not report.ok:
        raise PreconditionViolated(f"input decomposition invalid: {report.violations}")
    # claimed[i]: end slots of path i taken so far (0 = head, 1 = tail)
    claimed: dict[int, list[int]] = {}
    for w in nbrs:
        choice = None
        for i, p in enumerate(paths):
            if len(p) < 2:
                continue
            slots = claimed.get(i, [])
            if p[0] == w and 0 not in slots:
                choice = (i, 0)
            elif p[-1] == w and 1 not in slots:
                choice = (i, 1)
            if choice:
                break
        if choice is None:
            raise MissingEndpoint(f"no free path end at neighbour {w} of {v}")
        claimed.setdefault(choice[0], []).append(choice[1])

    new_paths: list[PathSeq] = []
    cycles = []
    for i, p in enumerate(paths):
        slots = claimed.get(i)
        if not slots:
            new_paths.append(p)
        elif len(slots) == 2:
            cycles.append((v,) + tuple(p))
        elif slots == [0]:
            new_paths.append((v,) + tuple(p))
        else:
            new_paths.append(tuple(p) + (v,))
    q = len(cycles)
    t = 0
    if cycles:
        bundle = decompose_flower_bundle(cycles=cycles, hub=v)
        t = len(bundle)
        new_paths.extend(bundle)
    before = sum(1 for p in paths if len(p) > 1)
    after = sum(1 for p in new_paths if len(p) > 1)
    record = ReattachRecord(v, len(nbrs), q, t, before, after)
    assert after == before - q + t
    return new_paths, record


def has_triangle_component(g: Graph) -> bool:
    return any(len(c) == 3 and sum(g.degree(v) for v in c) == 6 for c in components(g))


def decompose_with_removal_set(
    g: Graph,
    removal: TriangleRemovalSet | list[int] | tuple[int, ...],
    budget: SolverBudget | None = None,
    seed: int = 0,
) -> tuple[Decomposition, BoundLedger]:
    """At most ``floor(3n/5)`` paths for a graph with a triangle removal set."""
    if has_triangle_component(g):
        raise TriangleComponent("graph has a component isomorphic to a triangle")
    R = removal.vertices if isinstance(removal, TriangleRemovalSet) else tuple(removal)
    checked = validate_removal_set(g, R)
    if not isinstance(checked, TriangleRemovalSet):
        raise PreconditionViolated("invalid triangle removal set: " + "; ".join(checked))

    current = g.remove_vertices(R)
    base = decompose_triangle_free(current, budget, seed=seed)
    paths = list(base.paths)
    ledger = BoundLedger(
        initial_count=len(paths),
        allowed=allowed_paths(g, THREE_FIFTHS_N),
        seed=seed,
        labels=g.labels,
    )
    for v in R:
        nbrs = g.neighbors(v)
        paths, rec = reattach(current, v, paths, nbrs)
        current = current.with_edges((v, w) for w in nbrs)
        step = verify_paths(current, paths)
        assert step.ok, step.violations
        assert rec.cycles == 0 or rec.cycles <= rec.degree // 2
        assert rec.cycles == 0 or rec.bundle_paths == bundle_size(rec.cycles)
        ledger.records.append(rec)
        log.debug("reattached %s: q=%d t=%d count=%d", v, rec.cycles, rec.bundle_paths, rec.path_count_after)

    paths = [p for p in paths if len(p) > 1]
    ledger.final_count = len(paths)
    d = Decomposition(g, paths)
    report = bound_check(g, d, THREE_FIFTHS_N)
    if not report.passed:
        raise BoundViolated(
            f"{report.achieved} paths exceed floor(3n/5) = {report.allowed}", ledger=ledger
        )
    return d, ledger


def check_triangle_spacing(g: Graph, min_distance: int = 3) -> None:
    tris = enumerate_triangles(g)
    for a, b in itertools.combinations(tris, 2):
        dist = triangle_distance(g, a, b)
        if dist < min_distance:
            raise TrianglesTooClose(g.relabel_path(a), g.relabel_path(b), dist)


def decompose_eulerian(g: Graph, budget: SolverBudget | None = None, seed: int = 0) -> tuple[Decomposition, BoundLedger]:
    """Entry point for Eulerian graphs whose triangles are pairwise at distance >= 3."""
    if g.n < 4:
        raise TooSmall(f"need at least 4 vertices, got {g.n}")
    if not is_eulerian(g):
        raise NotEulerian("graph is not Eulerian")
    check_triangle_spacing(g)
    if is_triangle_free(g):
        d = decompose_triangle_free(g, budget, seed=seed)
        ledger = BoundLedger(
            initial_count=len(d),
            final_count=len(d),
            allowed=allowed_paths(g, THREE_FIFTHS_N),
            seed=seed,
            labels=g.labels,
        )
        report = bound_check(g, d, THREE_FIFTHS_N)
        if not report.passed:
            raise BoundViolated(f"{report.achieved} paths exceed {report.allowed}", ledger=ledger)
        return d, ledger
    removal = find_removal_set(g, exhaustive_cap=0)
    if removal is None:
        raise RemovalSetNotFound("greedy removal set failed validation")
    return decompose_with_removal_set(g, removal, budget, seed=seed)


def bound_reports(g: Graph, d: Decomposition) -> dict[str, BoundReport]:
    reports = {THREE_FIFTHS_N: bound_check(g, d, THREE_FIFTHS_N)}
    if is_triangle_free(g):
        reports[CFZ_ALPHA_BETA] = bound_check(g, d, CFZ_ALPHA_BETA)
    return reports
