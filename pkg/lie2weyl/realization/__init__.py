"""
Realization package for the lie2weyl engine.

This package builds the matrix bC, the series phi and the images of the Lie
algebra generators in the Weyl algebra.
"""
from lie2weyl.realization.phi import (
    Matrix,
    PhiMatrix,
    RealizationResult,
    c_matrix,
    c_powers,
    check_order,
    identity_matrix,
    matmul,
    phi_series,
    realization_result,
    realize,
    swapped,
    zero_matrix,
)

__all__ = [
    "Matrix",
    "PhiMatrix",
    "RealizationResult",
    "c_matrix",
    "c_powers",
    "check_order",
    "identity_matrix",
    "matmul",
    "phi_series",
    "realization_result",
    "realize",
    "swapped",
    "zero_matrix",
]
