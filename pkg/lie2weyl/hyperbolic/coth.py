"""
Exact identities for g = coth(x/2) and f = (x/2)coth(x/2).

Derivatives of g close on Q[g] through 2g' = 1 - g^2, so every identity in the
derivatives of g is checked as exact vanishing of a polynomial in g. The
functional equation for f is checked coefficient by coefficient on truncated
power series.
"""
import math
import threading
from fractions import Fraction
from typing import List

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from lie2weyl.core.bernoulli import bernoulli, even_coefficient
from lie2weyl.core.polynomial import Polynomial
from lie2weyl.core.series import PowerSeries, f_series
from lie2weyl.utils.errors import PreconditionError


class GPoly(Polynomial):
    """Polynomial in the symbol g standing for coth(x/2)."""

    __slots__ = ()

    symbol = "g"


# d/dx g = (1 - g^2)/2
_G_PRIME = GPoly([Fraction(1, 2), 0, Fraction(-1, 2)])

_derivatives: List[GPoly] = [GPoly.variable()]
_derivatives_lock = threading.Lock()


def g_derivative(j: int) -> GPoly:
    """
    The j-th x-derivative of g as a polynomial in g.

    Args:
        j: Derivative order, at least 0

    Returns:
        GPoly: g^(j), with g^(j+1) = d/dg(g^(j)) * (1 - g^2)/2
    """
    if j < 0:
        raise PreconditionError(f"Derivative order must be non-negative, got {j}")
    if j < len(_derivatives):
        return _derivatives[j]
    with _derivatives_lock:
        while len(_derivatives) <= j:
            _derivatives.append(_derivatives[-1].derivative() * _G_PRIME)
    return _derivatives[j]


def coth_residual(i: int) -> GPoly:
    """(i/2) g g^(i-1) + sum_{0 <= 2k < i} binom(i, 2k) B_2k g^(i-2k)"""
    if i < 2:
        raise PreconditionError(f"The coth identity needs i >= 2, got {i}")
    residual = GPoly.variable() * g_derivative(i - 1) * Fraction(i, 2)
    for k in range((i - 1) // 2 + 1):
        residual = residual + g_derivative(i - 2 * k) * (math.comb(i, 2 * k) * bernoulli(2 * k))
    return residual


def coth_identity_check(i: int) -> bool:
    """
    Check the Bernoulli-coth identity at order i.

    Args:
        i: Order, at least 2

    Returns:
        bool: True iff the residual is the zero polynomial in Q[g]
    """
    residual = coth_residual(i)
    if not residual.is_zero():
        logger.warning(f"coth identity fails at i={i}: {residual}")
        return False
    return True


class FunctionalEquationRow(BaseModel):
    """One coefficient of the functional equation for f."""

    model_config = ConfigDict(populate_by_name=True)

    i: int = Field(..., description="Derivative order")
    N: int = Field(..., description="Chain order; the coefficient of x^(N-i) is checked")
    passed: bool = Field(..., alias="pass", description="Whether the coefficient vanishes")


def _functional_expression(f: PowerSeries, i: int) -> PowerSeries:
    """(1/i!) f f^(i) + sum_k beta_2k x f^(i-2k+1)/(i-2k+1)! - delta_{i even} beta_i f"""
    expression = f * f.nth_derivative(i) * Fraction(1, math.factorial(i))
    for k in range(i // 2 + 1):
        m = i - 2 * k + 1
        expression = expression + f.nth_derivative(m).shift() * (even_coefficient(2 * k) / math.factorial(m))
    if i % 2 == 0:
        expression = expression - f * even_coefficient(i)
    return expression


def functional_equation_rows(i: int, N_max: int) -> List[FunctionalEquationRow]:
    """
    Evaluate the functional equation for f on its coefficient window.

    Args:
        i: Derivative order, at least 0
        N_max: Largest chain order N; only even N with max(4, i+1) <= N are used

    Returns:
        List[FunctionalEquationRow]: One row per even N in the window
    """
    if i < 0:
        raise PreconditionError(f"Derivative order must be non-negative, got {i}")
    window = [N for N in range(max(4, i + 1), N_max + 1) if N % 2 == 0]
    if not window:
        return []
    expression = _functional_expression(f_series(max(N_max, i + 1) + 1), i)
    rows = [FunctionalEquationRow(i=i, N=N, passed=expression.coefficient(N - i) == 0) for N in window]
    logger.debug(f"Functional equation at i={i}: {sum(row.passed for row in rows)}/{len(rows)} coefficients vanish")
    return rows


def functional_equation_check(i: int, N_max: int) -> bool:
    """True iff every coefficient in the window of functional_equation_rows vanishes."""
    return all(row.passed for row in functional_equation_rows(i, N_max))
