"""Exact rational tools for matrix spaces with few distinct eigenvalues."""

from ._eigspace import (
    EigspaceError,
    MatrixSubspace,
    char_poly,
    conjugate,
    count_distinct_eigenvalues,
    count_simple_eigenvalues,
    degenerate,
    det,
    enumerate_configs,
    extremal_space,
    is_borel_invariant,
    is_regular,
    max_dimension,
    maximality_probe,
    quartic_discriminant_check,
    rank,
    resultant,
    run_full_suite,
    spectral_profile,
    sum_and_intersection,
    two_zeros_resultant_check,
    verify_extremal,
    weight_decomposition,
)

__all__ = [
    "EigspaceError",
    "MatrixSubspace",
    "char_poly",
    "conjugate",
    "count_distinct_eigenvalues",
    "count_simple_eigenvalues",
    "degenerate",
    "det",
    "enumerate_configs",
    "extremal_space",
    "is_borel_invariant",
    "is_regular",
    "max_dimension",
    "maximality_probe",
    "quartic_discriminant_check",
    "rank",
    "resultant",
    "run_full_suite",
    "spectral_profile",
    "sum_and_intersection",
    "two_zeros_resultant_check",
    "verify_extremal",
    "weight_decomposition",
]
