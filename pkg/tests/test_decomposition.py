import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import paths_partition
from pathdecomp.decomposition import (
    CFZ_ALPHA_BETA,
    THREE_FIFTHS_N,
    Decomposition,
    allowed_paths,
    bound_check,
    certificate,
    cycle_neighbors,
    cycle_path,
    endpoint_count,
    paths_from_certificate,
    verify_fragment,
    verify_paths,
)
from pathdecomp.errors import InvalidDecomposition
from pathdecomp.graph import build_graph
from pathdecomp.solver import heuristic_decomposition


def test_cycle_path_drops_one_edge():
    assert cycle_path((0, 1, 2, 3), 1, 0) == (1, 2, 3, 0)
    assert cycle_path((0, 1, 2, 3), 0, 1) == (0, 3, 2, 1)


def test_cycle_neighbors():
    assert cycle_neighbors((4, 7, 2, 9), 4) == (7, 9)


def test_valid_bowtie_decomposition(bowtie):
    paths = [(0, 1, 2, 3, 4), (0, 2, 4)]
    assert verify_paths(bowtie, paths).ok


@pytest.mark.parametrize(
    "paths, fragment",
    [
        ([(0, 1, 2, 3, 4)], "uncovered"),
        ([(0, 1, 2, 3, 4), (0, 2, 4), (0, 1)], "already used"),
        ([(0, 1, 2, 0), (2, 3, 4, 2)], "repeated vertex"),
        ([(0, 1, 2, 3, 4), (0, 2, 4), (1, 3)], "not an edge"),
        ([(0, 1, 2, 3, 4), ()], "empty"),
    ],
)
def test_each_violation_is_named(bowtie, paths, fragment):
    report = verify_paths(bowtie, paths, exhaustive=True)
    assert not report.ok
    assert any(fragment in v for v in report.violations)


def test_exhaustive_lists_every_uncovered_edge(bowtie):
    report = verify_paths(bowtie, [(0, 1)], exhaustive=True)
    assert len(report.violations) == 5
    assert len(verify_paths(bowtie, [(0, 1)]).violations) == 1


def test_verify_fragment():
    assert verify_fragment([(0, 1), (1, 2)], [(0, 1, 2)]).ok
    assert not verify_fragment([(0, 1), (1, 2)], [(0, 1)]).ok


def test_endpoint_count_counts_both_ends():
    assert endpoint_count([(0, 1, 2), (2, 3), (1, 4)], 2) == 2
    assert endpoint_count([(0, 1, 2)], 1) == 0


def test_allowed_paths(k23, c9_triangle):
    assert allowed_paths(k23, THREE_FIFTHS_N) == 3
    assert allowed_paths(k23, CFZ_ALPHA_BETA) == 1 + 1
    assert allowed_paths(c9_triangle, THREE_FIFTHS_N) == 6
    with pytest.raises(ValueError):
        allowed_paths(k23, "nope")


def test_bound_check_rejects_invalid(bowtie):
    with pytest.raises(InvalidDecomposition):
        bound_check(bowtie, [(0, 1)], THREE_FIFTHS_N)


def test_bound_check_ignores_single_vertex_paths(bowtie):
    rep = bound_check(bowtie, [(0, 1, 2, 3, 4), (0, 2, 4), (3,)], THREE_FIFTHS_N)
    assert rep.achieved == 2 and rep.allowed == 3 and rep.passed
    assert rep.to_dict()["pass"] is True


def test_certificate_round_trip_with_labels():
    g = build_graph([("a", "b"), ("b", "c"), ("c", "a")])
    d = Decomposition(g, [(0, 1, 2), (0, 2)])
    cert = certificate(g, d, bound_check(g, d, THREE_FIFTHS_N))
    assert cert["paths"] == [["a", "b", "c"], ["a", "c"]]
    assert paths_from_certificate(g, cert) == [(0, 1, 2), (0, 2)]
    cert["paths"].append(["a", "zz"])
    assert paths_from_certificate(g, cert)[-1] == (0, -1)
    assert not verify_paths(g, paths_from_certificate(g, cert)).ok


def _random_partition(edges, rng):
    """Each edge as its own path, in random order."""
    es = list(edges)
    rng.shuffle(es)
    return [tuple(e) for e in es]


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10_000))
def test_verifier_agrees_with_oracle_on_mutants(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 7)
    es = sorted({tuple(sorted(rng.sample(range(n), 2))) for _ in range(rng.randint(1, 10))})
    g = build_graph(es, vertex_count=n)
    paths = _random_partition(es, rng)
    # random mutation, possibly none
    choice = rng.randrange(4)
    if choice == 1 and paths:
        paths.pop(rng.randrange(len(paths)))
    elif choice == 2 and paths:
        paths.append(rng.choice(paths))
    elif choice == 3 and paths:
        p = rng.choice(paths)
        paths.append((p[1], p[0], p[1]))
    assert verify_paths(g, paths).ok == paths_partition(es, paths)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10_000))
def test_endpoint_sum_and_order_independence(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 9)
    es = sorted({tuple(sorted(rng.sample(range(n), 2))) for _ in range(rng.randint(1, 14))})
    g = build_graph(es, vertex_count=n)
    paths = heuristic_decomposition(g, seed=seed, restarts=2)
    assert sum(endpoint_count(paths, v) for v in g.vertices()) == 2 * len(paths)
    shuffled = paths[:]
    rng.shuffle(shuffled)
    assert verify_paths(g, shuffled).ok == verify_paths(g, paths).ok
