"""
Commutators, involutions and derivations on Weyl elements.
"""
from fractions import Fraction
from typing import Dict, Sequence

from lie2weyl.utils.errors import DimensionMismatchError, PreconditionError
from lie2weyl.weyl.element import MonomialKey, WeylElement, _unit, normal_mul, reorder


def commutator(u: WeylElement, v: WeylElement) -> WeylElement:
    """[u, v] = uv - vu."""
    return normal_mul(u, v) - normal_mul(v, u)


def _reversed_products(u: WeylElement, swap: bool) -> WeylElement:
    terms: Dict[MonomialKey, Fraction] = {}
    for (a, b, d), coefficient in u.terms.items():
        if swap:
            # x^a d^b -> (-d)^a x^b
            sign = -1 if sum(a) % 2 else 1
            left, right = a, b
        else:
            # x^a d^b -> (-d)^b x^a
            sign = -1 if sum(b) % 2 else 1
            left, right = b, a
        for a_new, b_new, weight in reorder(left, right):
            key = (a_new, b_new, d)
            terms[key] = terms.get(key, Fraction(0)) + sign * weight * coefficient
    return WeylElement._wrap(u.dim, u.order, terms)


def dagger(u: WeylElement) -> WeylElement:
    """
    The antiautomorphism x -> x, d -> -d.

    Args:
        u: Any Weyl element

    Returns:
        WeylElement: dagger(u), normal ordered
    """
    return _reversed_products(u, swap=False)


def swap_automorphism(u: WeylElement) -> WeylElement:
    """
    The automorphism x_i -> -d^i, d^i -> x_i.

    Args:
        u: Any Weyl element

    Returns:
        WeylElement: The image, normal ordered, with t-degrees unchanged
    """
    return _reversed_products(u, swap=True)


def _require_partial_only(u: WeylElement, operation: str) -> None:
    if u.has_x():
        raise PreconditionError(f"{operation} applies to elements without x factors")


def delta_derivative(u: WeylElement, rho: int) -> WeylElement:
    """
    Formal partial derivative in the commuting variable d^rho.

    Args:
        u: Element free of x factors
        rho: 0-based index

    Returns:
        WeylElement: d u / d(d^rho)
    """
    if not 0 <= rho < u.dim:
        raise PreconditionError(f"Index {rho + 1} is out of range 1..{u.dim}")
    _require_partial_only(u, "delta_derivative")
    terms: Dict[MonomialKey, Fraction] = {}
    for (a, b, d), coefficient in u.terms.items():
        power = b[rho]
        if power:
            lowered = b[:rho] + (power - 1,) + b[rho + 1:]
            terms[(a, lowered, d)] = coefficient * power
    return WeylElement._wrap(u.dim, u.order, terms)


def substitute_partials(u: WeylElement, matrix: Sequence[Sequence[Fraction]]) -> WeylElement:
    """
    Linear change of the commuting variables, d^b -> sum_k matrix[b][k] d^k.

    Args:
        u: Element free of x factors
        matrix: n x n rational matrix

    Returns:
        WeylElement: The substituted element
    """
    n = u.dim
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise DimensionMismatchError(f"Substitution matrix must be {n} x {n}")
    _require_partial_only(u, "substitute_partials")
    images = [
        WeylElement(n, u.order, {((0,) * n, _unit(n, k), 0): matrix[beta][k] for k in range(n)})
        for beta in range(n)
    ]
    result = WeylElement.zero(n, u.order)
    for (_, b, d), coefficient in u.terms.items():
        term = WeylElement.monomial(n, u.order, d=d, coefficient=coefficient)
        for beta, power in enumerate(b):
            for _ in range(power):
                term = normal_mul(term, images[beta])
        result = result + term
    return result


def at_origin(u: WeylElement) -> WeylElement:
    """The part of u free of x, i.e. u evaluated at x = 0."""
    return WeylElement._wrap(u.dim, u.order, {k: v for k, v in u.terms.items() if not any(k[0])})
