"""Numerical semigroups: pseudo-Frobenius numbers, RF-matrices and toric ideals."""

from ._core import (
    Error,
    NumericalSemigroup,
    alphas,
    construct_family,
    factorizations,
    generates,
    graded_betti,
    komeda_form,
    minimal_generators,
    rf_matrices,
    rf_relations,
    scan,
    verify_all,
    verify_family,
)

__all__ = [
    "Error",
    "NumericalSemigroup",
    "alphas",
    "construct_family",
    "factorizations",
    "generates",
    "graded_betti",
    "komeda_form",
    "minimal_generators",
    "rf_matrices",
    "rf_relations",
    "scan",
    "verify_all",
    "verify_family",
]
