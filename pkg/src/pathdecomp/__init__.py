"""Constructive path decompositions of Eulerian graphs with spaced triangles."""

from .decomposition import (
    CFZ_ALPHA_BETA,
    THREE_FIFTHS_N,
    BoundReport,
    Decomposition,
    VerificationReport,
    bound_check,
    certificate,
    endpoint_count,
    verify_decomposition,
)
from .graph import (
    DegreeProfile,
    Graph,
    build_graph,
    degree_profile,
    enumerate_triangles,
    is_eulerian,
    triangle_distance,
)
from .lemmas import (
    ExceptionalGraph,
    Flower,
    MergeInstance,
    decompose_flower,
    decompose_flower_bundle,
    merge_path_with_cycles,
    two_path_merge,
)
from .pipeline import (
    BoundLedger,
    TriangleRemovalSet,
    decompose_eulerian,
    decompose_with_removal_set,
    find_removal_set,
    reattach,
    validate_removal_set,
)
from .solver import SolverBudget, decompose_triangle_free, exact_min_decomposition
from .twopath import contracted_two_path_search

__all__ = [
    "CFZ_ALPHA_BETA",
    "THREE_FIFTHS_N",
    "BoundLedger",
    "BoundReport",
    "Decomposition",
    "DegreeProfile",
    "ExceptionalGraph",
    "Flower",
    "Graph",
    "MergeInstance",
    "SolverBudget",
    "TriangleRemovalSet",
    "VerificationReport",
    "bound_check",
    "build_graph",
    "certificate",
    "contracted_two_path_search",
    "decompose_eulerian",
    "decompose_flower",
    "decompose_flower_bundle",
    "decompose_triangle_free",
    "decompose_with_removal_set",
    "degree_profile",
    "endpoint_count",
    "enumerate_triangles",
    "exact_min_decomposition",
    "find_removal_set",
    "is_eulerian",
    "merge_path_with_cycles",
    "reattach",
    "triangle_distance",
    "two_path_merge",
    "validate_removal_set",
    "verify_decomposition",
]
