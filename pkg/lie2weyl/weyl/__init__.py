"""
Weyl algebra package for the lie2weyl engine.

This package provides normal-ordered elements of A_n[[t]] and the operations
the realization and its checks are built from.
"""
from lie2weyl.weyl.element import WeylElement, normal_mul, reorder
from lie2weyl.weyl.operations import (
    at_origin,
    commutator,
    dagger,
    delta_derivative,
    substitute_partials,
    swap_automorphism,
)

__all__ = [
    "WeylElement",
    "normal_mul",
    "reorder",
    "at_origin",
    "commutator",
    "dagger",
    "delta_derivative",
    "substitute_partials",
    "swap_automorphism",
]
