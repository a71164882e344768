"""
Verifier package for the lie2weyl engine.

This package checks order by order that the realization is a Lie algebra
homomorphism, together with its auxiliary identities.
"""
from lie2weyl.verifier.checks import (
    check_commutators,
    check_covariance,
    check_lambda_reflection,
    check_order_condition,
    check_pde,
)
from lie2weyl.verifier.models import IdentityReport, PairResidual, VerificationMode, VerificationReport

__all__ = [
    "check_commutators",
    "check_covariance",
    "check_lambda_reflection",
    "check_order_condition",
    "check_pde",
    "IdentityReport",
    "PairResidual",
    "VerificationMode",
    "VerificationReport",
]
