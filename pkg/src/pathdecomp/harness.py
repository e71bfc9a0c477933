"""Drivers shared by the CLI, the benchmarks and the acceptance checks."""

from __future__ import annotations

import csv
import io
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .decomposition import THREE_FIFTHS_N, Decomposition, bound_check
from .errors import RemovalSetNotFound, TrianglesTooClose
from .generators import GenSpec, generate
from .graph import Graph, components, is_eulerian
from .lemmas import decompose_flower
from .pipeline import (
    BoundLedger,
    check_triangle_spacing,
    decompose_eulerian,
    decompose_with_removal_set,
    find_removal_set,
)
from .solver import SolverBudget

CSV_COLUMNS = ("seed", "n", "m", "k", "q_total", "count", "allowed", "pass", "millis")


def decompose_graph(g: Graph, budget: SolverBudget | None = None, seed: int = 0) -> tuple[Decomposition, BoundLedger]:
    """Eulerian graphs with spaced triangles go through the Eulerian entry
    point; everything else needs a triangle removal set."""
    if is_eulerian(g) and g.n >= 4:
        try:
            check_triangle_spacing(g)
        except TrianglesTooClose:
            pass
        else:
            return decompose_eulerian(g, budget, seed)
    elif is_eulerian(g):
        return decompose_eulerian(g, budget, seed)
    removal = find_removal_set(g)
    if removal is None:
        raise RemovalSetNotFound("no triangle removal set found")
    return decompose_with_removal_set(g, removal, budget, seed)


def constructive_decomposition(g: Graph, budget: SolverBudget | None = None, seed: int = 0) -> Decomposition:
    """Like ``decompose_graph`` but also accepts triangle components.

    Each triangle component is split into two paths by the flower lemma;
    the rest of the graph goes through the removal-set pipeline.
    """
    tri_comps = [c for c in components(g) if len(c) == 3 and sum(g.degree(v) for v in c) == 6]
    paths = []
    for c in tri_comps:
        paths.extend(decompose_flower(cycles=[tuple(c)], hub=c[0]))
    rest = g.remove_vertices(v for c in tri_comps for v in c)
    if rest.m:
        d, _ = decompose_graph(rest, budget, seed)
        paths.extend(d.paths)
    return Decomposition(g, paths)


@dataclass
class BenchRow:
    seed: int
    n: int
    m: int
    k: int
    q_total: int
    count: int
    allowed: int
    passed: bool
    millis: int

    def as_csv(self) -> list:
        return [self.seed, self.n, self.m, self.k, self.q_total, self.count, self.allowed,
                str(self.passed).lower(), self.millis]


def bench_instance(family: str, params: dict, seed: int, budget_ms: int | None = None) -> BenchRow:
    g = generate(GenSpec(family, params, seed))
    budget = SolverBudget(time_limit_ms=budget_ms) if budget_ms else None
    start = time.perf_counter()
    d, ledger = decompose_graph(g, budget, seed)
    millis = int((time.perf_counter() - start) * 1000)
    report = bound_check(g, d, THREE_FIFTHS_N)
    return BenchRow(seed, g.n, g.m, len(ledger.records), ledger.q_total, len(d), report.allowed, report.passed, millis)


def _bench_job(args):
    return bench_instance(*args)


def run_bench(family: str, params: dict, seeds, budget_ms: int | None = None, workers: int | None = None) -> list[BenchRow]:
    """One row per seed, in seed order whatever order the workers finish in."""
    jobs = [(family, params, s, budget_ms) for s in seeds]
    if workers == 1 or len(jobs) < 2:
        return [_bench_job(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_bench_job, jobs))


def rows_to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.as_csv())
    return buf.getvalue()


def sample_spaced_params(seed: int, n_range=(15, 60), t_range=(1, 3)) -> dict:
    """Random feasible ``(n, t)`` for the spaced-triangle family."""
    rng = random.Random(seed ^ 0x5EED)
    t = rng.randint(*t_range)
    n = rng.randint(max(n_range[0], 6 * t), n_range[1])
    return {"n": n, "t": t}
