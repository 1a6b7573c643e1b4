"""Quasi-pseudometric spaces, Hausdorff distances and startpoint iteration.

Exact values are returned as :class:`fractions.Fraction`; spaces built with
``arithmetic="float"`` return plain floats.
"""

from ._qpm import (
    ComparisonFunction,
    DocumentError,
    GenerationError,
    SetValuedMap,
    Space,
    ball_contains,
    check_axioms,
    dist_point_set,
    dist_set_point,
    endpoint_defect,
    enumerate_endpoints,
    enumerate_fixed_points,
    enumerate_startpoints,
    fixed_defect,
    hausdorff,
    load_system,
    paper_example_space,
    paper_example_truncated,
    random_weakly_contractive_system,
    solve,
    startpoint_defect,
    validate_trace,
    verify_gamma1,
    verify_weak_contraction,
)

__all__ = [
    "ComparisonFunction",
    "DocumentError",
    "GenerationError",
    "SetValuedMap",
    "Space",
    "ball_contains",
    "check_axioms",
    "dist_point_set",
    "dist_set_point",
    "endpoint_defect",
    "enumerate_endpoints",
    "enumerate_fixed_points",
    "enumerate_startpoints",
    "fixed_defect",
    "hausdorff",
    "load_system",
    "paper_example_space",
    "paper_example_truncated",
    "random_weakly_contractive_system",
    "solve",
    "startpoint_defect",
    "validate_trace",
    "verify_gamma1",
    "verify_weak_contraction",
]
