"""
The tangent of the exponential map in U(g_t)[eps], eps^2 = 0.

    exp(X + Y eps) = exp(X) (1 + Z eps),   Z  = sum_n (-ad X)^n / (n+1)! (Y)
    exp(X + Y eps) = (1 + Z' eps) exp(X),  Z' = sum_n (ad X)^n / (n+1)! (Y)

X carries bracket degree one, so every exponential series is finite once the
bracket degree is truncated.
"""
import random
from fractions import Fraction
from math import factorial
from typing import Optional, Sequence, Union

from loguru import logger

from lie2weyl.lie.models import StructureConstants
from lie2weyl.pbw.algebra import PBWAlgebra, PBWElement
from lie2weyl.pbw.sharp import Convention
from lie2weyl.utils.errors import PreconditionError

Scalar = Union[Fraction, int]


class EpsilonPair:
    """a + b eps over PBW elements with eps^2 = 0."""

    __slots__ = ("a", "b")

    def __init__(self, a: PBWElement, b: PBWElement):
        self.a = a
        self.b = b

    def __add__(self, other: "EpsilonPair") -> "EpsilonPair":
        return EpsilonPair(self.a + other.a, self.b + other.b)

    def __mul__(self, other: Union["EpsilonPair", Scalar]) -> "EpsilonPair":
        if isinstance(other, EpsilonPair):
            return EpsilonPair(self.a * other.a, self.a * other.b + self.b * other.a)
        return EpsilonPair(self.a.scale(other), self.b.scale(other))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EpsilonPair):
            return NotImplemented
        return self.a == other.a and self.b == other.b

    __hash__ = None  # type: ignore[assignment]


def exp_series(u: EpsilonPair, terms: int) -> EpsilonPair:
    """sum_{n <= terms} u^n / n!"""
    algebra = u.a.algebra
    power = EpsilonPair(algebra.one(), algebra.zero())
    total = power
    for n in range(1, terms + 1):
        power = power * u
        total = total + power * Fraction(1, factorial(n))
    return total


def tangent_vector(
    C: StructureConstants,
    X: Sequence[Scalar],
    Y: Sequence[Scalar],
    T: int,
    convention: Convention = Convention.RIGHT_INVARIANT,
    algebra: Optional[PBWAlgebra] = None,
) -> PBWElement:
    """
    The Lie element Z (left-invariant) or Z' (right-invariant).

    Args:
        C: Structure constants
        X: Coordinates of X, placed at bracket degree 1
        Y: Coordinates of Y
        T: Bracket-degree order
        convention: LEFT_INVARIANT gives Z, RIGHT_INVARIANT gives Z'
        algebra: Enveloping algebra to build the element in

    Returns:
        PBWElement: sum_n (+-ad X)^n / (n+1)! (Y); each ad X adds two bracket degrees,
            one carried by X and one by the bracket
    """
    algebra = algebra or PBWAlgebra(C, T)
    x = [Fraction(value) for value in X]
    vector = [Fraction(value) for value in Y]
    sign = -1 if convention == Convention.LEFT_INVARIANT else 1
    total = algebra.zero()
    for n in range(T // 2 + 1):
        total = total + algebra.linear(vector, d=2 * n).scale(Fraction(sign**n, factorial(n + 1)))
        vector = C.ad(x, vector)
    return total


def exp_tangent_check(
    C: StructureConstants,
    T: int,
    convention: Convention = Convention.RIGHT_INVARIANT,
    samples: int = 3,
    seed: int = 1729,
) -> bool:
    """
    Compare the eps-part of exp(X + Y eps) with exp(X) Z, or Z' exp(X).

    Args:
        C: Structure constants
        T: Bracket-degree order
        convention: Which form of the identity to check
        samples: Number of random (X, Y) pairs
        seed: Seed of the random pairs

    Returns:
        bool: True iff every sample agrees through bracket degree T
    """
    if T < 0:
        raise PreconditionError(f"Bracket-degree order must be non-negative, got {T}")
    rng = random.Random(seed)
    algebra = PBWAlgebra(C, T)
    for _ in range(samples):
        X = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(C.dim)]
        Y = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(C.dim)]
        x_element = algebra.linear(X, d=1)
        moved = exp_series(EpsilonPair(x_element, algebra.linear(Y)), T + 1)
        exp_x = exp_series(EpsilonPair(x_element, algebra.zero()), T).a
        Z = tangent_vector(C, X, Y, T, convention, algebra)
        expected = exp_x * Z if convention == Convention.LEFT_INVARIANT else Z * exp_x
        if moved.b != expected:
            logger.debug(f"Tangent identity fails on {C.label} ({convention.value})")
            return False
    return True
