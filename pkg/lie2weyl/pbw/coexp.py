"""
The coexponential map xi: S(g) -> U(g) and its inverse.

xi sends a monomial to the symmetrization of its letters,

    xi(x^a) = (1/|a|) sum_i a_i z_i xi(x^(a - e_i)),

so its leading term is z^a and every correction has lower polynomial degree.
Elements of S(g) are represented as x-only Weyl elements whose t-degree is
the bracket degree.
"""
from fractions import Fraction
from typing import Dict, Sequence

from lie2weyl.pbw.algebra import PBWAlgebra, PBWElement
from lie2weyl.utils.errors import PreconditionError
from lie2weyl.weyl.element import MonomialKey, WeylElement


def coexp(algebra: PBWAlgebra, alpha: Sequence[int]) -> PBWElement:
    """
    Symmetrized image of the monomial x^alpha.

    Args:
        algebra: Enveloping algebra to compute in
        alpha: Exponent of the S(g) monomial

    Returns:
        PBWElement: xi(x^alpha), memoized per algebra
    """
    key = tuple(alpha)
    if len(key) != algebra.dim or min(key) < 0:
        raise PreconditionError(f"Invalid monomial exponent {list(key)} for dimension {algebra.dim}")
    cached = algebra._cached(algebra._coexp_cache, key)
    if cached is not None:
        return cached

    degree = sum(key)
    if degree == 0:
        return algebra._store(algebra._coexp_cache, key, algebra.one())

    total = algebra.zero()
    for i, power in enumerate(key):
        if power:
            lowered = key[:i] + (power - 1,) + key[i + 1:]
            total = total + (algebra.generator(i) * coexp(algebra, lowered)).scale(power)
    return algebra._store(algebra._coexp_cache, key, total.scale(Fraction(1, degree)))


def coexp_of(algebra: PBWAlgebra, s: WeylElement) -> PBWElement:
    """xi applied linearly to an x-only Weyl element."""
    total = algebra.zero()
    for (a, _, d), value in s.terms.items():
        total = total + coexp(algebra, a).shift(d).scale(value)
    return total


def coexp_inverse(u: PBWElement, D: int) -> WeylElement:
    """
    Preimage of u under xi by elimination from the top polynomial degree.

    Args:
        u: Element with polynomial degree at most D
        D: Degree bound

    Returns:
        WeylElement: x-only element s with xi(s) = u, t-degree = bracket degree
    """
    algebra = u.algebra
    n = algebra.dim
    zeros = (0,) * n
    remaining = u
    result: Dict[MonomialKey, Fraction] = {}
    while not remaining.is_zero():
        (gamma, d), value = max(remaining.terms.items(), key=lambda item: (sum(item[0][0]), item[0]))
        if sum(gamma) > D:
            raise PreconditionError(f"Monomial of degree {sum(gamma)} exceeds the degree bound {D}")
        result[(gamma, zeros, d)] = result.get((gamma, zeros, d), Fraction(0)) + value
        remaining = remaining - coexp(algebra, gamma).shift(d).scale(value)
    return WeylElement(n, u.order, result)
