"""
Enveloping-algebra oracle for the lie2weyl engine.

This package re-derives phi through U(g): PBW straightening, the
coexponential map, coderivations and their sharp maps, and the tangent of
the exponential map.
"""
from lie2weyl.pbw.algebra import PBWAlgebra, PBWElement, pbw_mul
from lie2weyl.pbw.coexp import coexp, coexp_inverse, coexp_of
from lie2weyl.pbw.sharp import (
    Convention,
    SharpMap,
    coderivation_sharp,
    cross_oracle_check,
    derivation_closure_check,
    derivation_elements,
    dhxn_check,
    monomials,
    phi_from_oracle,
    sharp_polarization_check,
    teq_check,
)
from lie2weyl.pbw.tangent import EpsilonPair, exp_series, exp_tangent_check, tangent_vector

__all__ = [
    "PBWAlgebra",
    "PBWElement",
    "pbw_mul",
    "coexp",
    "coexp_inverse",
    "coexp_of",
    "Convention",
    "SharpMap",
    "coderivation_sharp",
    "cross_oracle_check",
    "derivation_closure_check",
    "derivation_elements",
    "dhxn_check",
    "monomials",
    "phi_from_oracle",
    "sharp_polarization_check",
    "teq_check",
    "EpsilonPair",
    "exp_series",
    "exp_tangent_check",
    "tangent_vector",
]
