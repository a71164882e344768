"""
Hyperbolic identities for the lie2weyl engine.
"""
from lie2weyl.hyperbolic.coth import (
    FunctionalEquationRow,
    GPoly,
    coth_identity_check,
    coth_residual,
    functional_equation_check,
    functional_equation_rows,
    g_derivative,
)

__all__ = [
    "FunctionalEquationRow",
    "GPoly",
    "coth_identity_check",
    "coth_residual",
    "functional_equation_check",
    "functional_equation_rows",
    "g_derivative",
]
