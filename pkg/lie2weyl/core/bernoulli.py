"""
Bernoulli numbers for the lie2weyl engine.

This module provides the memoized table B_n of T/(e^T - 1) (convention
B_1 = -1/2) and the two normalized coefficient families built from it:
A_n = (-1)^n B_n/n!, the coefficients of the realization series, and
beta_n = B_n/n!, the coefficients of (x/2)coth(x/2).
"""
import math
import threading
from fractions import Fraction
from typing import List, Tuple

from loguru import logger

from lie2weyl.utils.errors import PreconditionError


class BernoulliTable:
    """
    Growing table of Bernoulli numbers.

    Extension is lock-protected; reads of already computed entries never block
    on a writer because the list only ever grows.
    """

    def __init__(self):
        self._values: List[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    @property
    def size(self) -> int:
        return len(self._values)

    def _extend(self, n: int) -> None:
        with self._lock:
            values = self._values
            start = len(values)
            for m in range(start, n + 1):
                # sum_{j<=m} binom(m+1, j) B_j = 0
                total = sum(math.comb(m + 1, j) * values[j] for j in range(m))
                values.append(-total / (m + 1))
            if n >= start:
                logger.debug(f"Extended Bernoulli table to index {n}")

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise PreconditionError(f"Bernoulli index must be non-negative, got {n}")
        if n >= len(self._values):
            self._extend(n)
        return self._values[n]

    def values(self, n: int) -> Tuple[Fraction, ...]:
        """Return B_0..B_n."""
        self.get(n)
        return tuple(self._values[: n + 1])


# Global table instance
bernoulli_table = BernoulliTable()


def bernoulli(n: int) -> Fraction:
    """Return B_n under the B_1 = -1/2 convention."""
    return bernoulli_table.get(n)


def expansion_coefficient(n: int) -> Fraction:
    """A_n = (-1)^n B_n / n!, so A_0 = 1, A_1 = 1/2, A_2 = 1/12, A_4 = -1/720."""
    return (-1) ** n * bernoulli(n) / math.factorial(n)


def even_coefficient(n: int) -> Fraction:
    """beta_n = B_n / n!, the Taylor coefficient of (x/2)coth(x/2) at x^n."""
    return bernoulli(n) / math.factorial(n)


def convolution_identity_check(l: int) -> bool:
    """
    Check sum_{s=1}^{l} beta_{2s} beta_{2l-2s} = -B_{2l}/(2l-1)! + delta_{l,1}/4.

    Args:
        l: Positive integer

    Returns:
        bool: True iff both sides agree exactly
    """
    if l < 1:
        raise PreconditionError(f"convolution identity needs l >= 1, got {l}")
    lhs = sum(
        (even_coefficient(2 * s) * even_coefficient(2 * l - 2 * s) for s in range(1, l + 1)),
        Fraction(0),
    )
    rhs = -bernoulli(2 * l) / math.factorial(2 * l - 1)
    if l == 1:
        rhs += Fraction(1, 4)
    return lhs == rhs
