"""
lie2weyl: exact Weyl-algebra realizations of finite-dimensional Lie algebras.

The package builds the universal realization of a Lie algebra from its
structure constants, verifies it order by order in the grading parameter t,
and checks the identities it rests on against an independent
enveloping-algebra oracle.
"""
from lie2weyl.lie import StructureConstants, catalog, load_algebra, parse_algebra
from lie2weyl.realization import phi_series, realize
from lie2weyl.verifier import check_commutators

__version__ = "0.1.0"

__all__ = [
    "StructureConstants",
    "catalog",
    "load_algebra",
    "parse_algebra",
    "phi_series",
    "realize",
    "check_commutators",
]
