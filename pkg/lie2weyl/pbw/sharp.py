"""
Coderivations D_h = xi^-1 L_h xi and their sharp maps.

The sharp map of D_h projects D_h(x^a) onto the degree-one part of S(g), a
g-valued function on monomials. Its values reconstruct the main formula

    D_h = sum_s B_s / s! (ad X)^s (h),

which is compared with the swapped series phi of the realization.
"""
import random
from enum import Enum
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field
from sympy.utilities.iterables import multiset_permutations

from lie2weyl.core.bernoulli import bernoulli
from lie2weyl.core.polynomial import Polynomial
from lie2weyl.core.rational import binom
from lie2weyl.lie.models import StructureConstants
from lie2weyl.pbw.algebra import PBWAlgebra, PBWElement
from lie2weyl.pbw.coexp import coexp, coexp_inverse, coexp_of
from lie2weyl.realization.phi import PhiMatrix, phi_series, swapped
from lie2weyl.utils.errors import PreconditionError
from lie2weyl.utils.parallel import parallel_map
from lie2weyl.weyl.element import MonomialKey, WeylElement, normal_mul
from lie2weyl.weyl.operations import at_origin, commutator

Exponent = Tuple[int, ...]


class Convention(str, Enum):
    """Side on which h multiplies in D_h."""

    RIGHT_INVARIANT = "right-invariant"
    LEFT_INVARIANT = "left-invariant"


def bernoulli_sign(k: int, convention: Convention) -> Fraction:
    """B_k in the right-invariant convention, (-1)^k B_k in the left-invariant one."""
    value = bernoulli(k)
    if convention == Convention.LEFT_INVARIANT and k % 2:
        return -value
    return value


def monomials(n: int, max_degree: int) -> List[Exponent]:
    """Every exponent of total degree at most max_degree, by degree then lexicographically."""
    result = []
    for degree in range(max_degree + 1):
        result.extend(alpha for alpha in product(range(degree + 1), repeat=n) if sum(alpha) == degree)
    return result


def _alpha_factorial(alpha: Sequence[int]) -> int:
    value = 1
    for power in alpha:
        value *= factorial(power)
    return value


class SharpMap(BaseModel):
    """g-valued values of X^sharp(D_h(x^a)) on the monomials of degree <= max_degree."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    h: int = Field(..., description="0-based index of the basis element h")
    max_degree: int = Field(..., ge=0, description="Degree bound D")
    convention: Convention = Field(Convention.RIGHT_INVARIANT, description="Side of the multiplication by h")
    table: Dict[Exponent, Tuple[Fraction, ...]] = Field(default_factory=dict, description="Monomial -> vector in g")

    def value(self, alpha: Sequence[int]) -> Tuple[Fraction, ...]:
        return self.table[tuple(alpha)]


def apply_coderivation(algebra: PBWAlgebra, h: int, s: PBWElement, convention: Convention) -> PBWElement:
    """L_h or R_h on an element of U(g)."""
    z_h = algebra.generator(h)
    if convention == Convention.RIGHT_INVARIANT:
        return z_h * s
    return s * z_h


def _sharp(image: WeylElement) -> Tuple[Fraction, ...]:
    values = [Fraction(0)] * image.dim
    for (a, _, _), value in image.terms.items():
        if sum(a) == 1:
            values[a.index(1)] += value
    return tuple(values)


def coderivation_sharp(
    C: StructureConstants,
    h: int,
    D: int,
    convention: Convention = Convention.RIGHT_INVARIANT,
    algebra: Optional[PBWAlgebra] = None,
    threads: Optional[int] = None,
) -> SharpMap:
    """
    Tabulate X^sharp(xi^-1(z_h xi(x^a))) over every monomial of degree <= D.

    Args:
        C: Structure constants
        h: 0-based basis index
        D: Degree bound
        convention: RIGHT_INVARIANT multiplies by z_h on the left
        algebra: Shared enveloping algebra with bracket order at least D
        threads: Worker threads for the monomial fan-out

    Returns:
        SharpMap: The g-valued table
    """
    if D < 0:
        raise PreconditionError(f"Degree bound must be non-negative, got {D}")
    algebra = algebra or PBWAlgebra(C, D)

    def value(alpha: Exponent) -> Tuple[Fraction, ...]:
        image = apply_coderivation(algebra, h, coexp(algebra, alpha), convention)
        return _sharp(coexp_inverse(image, D + 1))

    keys = monomials(C.dim, D)
    values = parallel_map(value, keys, threads)
    return SharpMap(h=h, max_degree=D, convention=convention, table=dict(zip(keys, values)))


def _ad_power(C: StructureConstants, x: Sequence[Fraction], h: int, k: int) -> List[Fraction]:
    vector = [Fraction(int(i == h)) for i in range(C.dim)]
    for _ in range(k):
        vector = C.ad(x, vector)
    return vector


def _random_vector(rng: random.Random, n: int) -> List[Fraction]:
    return [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)]


def _power_in_symmetric(x: Sequence[Fraction], n: int, order: int) -> WeylElement:
    """(sum_i x_i c_i)^n as an x-only Weyl element."""
    dim = len(x)
    zeros = (0,) * dim
    linear = WeylElement(dim, order, {(tuple(int(k == i) for k in range(dim)), zeros, 0): c for i, c in enumerate(x)})
    result = WeylElement.one(dim, order)
    for _ in range(n):
        result = normal_mul(result, linear)
    return result


def dhxn_check(
    C: StructureConstants,
    n_max: int,
    convention: Convention = Convention.RIGHT_INVARIANT,
    samples: int = 3,
    seed: int = 1729,
) -> bool:
    """
    Check D_h(x^n) = sum_k binom(n,k) B_k x^(n-k) (ad x)^k (h) at random points x.

    Args:
        C: Structure constants
        n_max: Largest power n
        convention: Sign convention of the Bernoulli coefficients
        samples: Number of random rational vectors x
        seed: Seed of the random points

    Returns:
        bool: True iff every h, n <= n_max and sample agree
    """
    n = C.dim
    rng = random.Random(seed)
    algebra = PBWAlgebra(C, n_max + 1)
    zeros = (0,) * n
    for _ in range(samples):
        x = _random_vector(rng, n)
        powers = [_power_in_symmetric(x, m, n_max + 1) for m in range(n_max + 1)]
        for h in range(n):
            for m in range(n_max + 1):
                xi = coexp_of(algebra, powers[m])
                computed = coexp_inverse(apply_coderivation(algebra, h, xi, convention), n_max + 1)

                expected = WeylElement.zero(n, n_max + 1)
                for k in range(m + 1):
                    weight = binom(m, k) * bernoulli_sign(k, convention)
                    if not weight:
                        continue
                    vector = _ad_power(C, x, h, k)
                    terms: Dict[MonomialKey, Fraction] = {}
                    for l, component in enumerate(vector):
                        if component:
                            terms[(tuple(int(i == l) for i in range(n)), zeros, k)] = weight * component
                    expected = expected + normal_mul(powers[m - k], WeylElement(n, n_max + 1, terms))
                if computed != expected:
                    logger.debug(f"D_h(x^n) mismatch on {C.label}: h={h + 1}, n={m}")
                    return False
    return True


def _ad_word(C: StructureConstants, word: Sequence[int], h: int) -> List[Fraction]:
    """ad x_w1 ... ad x_wk (h), innermost letter last."""
    vector = [Fraction(int(i == h)) for i in range(C.dim)]
    for letter in reversed(word):
        unit = [Fraction(int(i == letter)) for i in range(C.dim)]
        vector = C.ad(unit, vector)
    return vector


def sharp_polarization_check(
    C: StructureConstants, n_max: int, convention: Convention = Convention.RIGHT_INVARIANT
) -> bool:
    """
    Check the polarized sharp values.

    On a monomial x^a of degree m the sharp value of D_h equals
    (B'_m / m!) a! sum_w ad x_w1 ... ad x_wm (h), summed over the distinct
    words w with letter multiplicities a.

    Args:
        C: Structure constants
        n_max: Degree bound
        convention: Sign convention of B'_m

    Returns:
        bool: True iff every h and every monomial agree
    """
    algebra = PBWAlgebra(C, n_max)
    for h in range(C.dim):
        sharp = coderivation_sharp(C, h, n_max, convention, algebra)
        for alpha, value in sharp.table.items():
            m = sum(alpha)
            letters = [i for i, power in enumerate(alpha) for _ in range(power)]
            total = [Fraction(0)] * C.dim
            for word in multiset_permutations(letters):
                for i, component in enumerate(_ad_word(C, word, h)):
                    total[i] += component
            weight = bernoulli_sign(m, convention) * _alpha_factorial(alpha) / factorial(m)
            if tuple(weight * component for component in total) != value:
                logger.debug(f"Polarized sharp value mismatch on {C.label}: h={h + 1}, monomial={list(alpha)}")
                return False
    return True


def teq_check(n: int) -> bool:
    """
    Check T^n = sum_k a_k/(k+1) ((T+1)^(k+1) - T^(k+1)) with a_k = binom(n,k) B_(n-k).

    Args:
        n: Power, at least 0

    Returns:
        bool: True iff the polynomial identity holds
    """
    if n < 0:
        raise PreconditionError(f"teq_check needs n >= 0, got {n}")
    T = Polynomial.variable()
    shifted = T + Polynomial.constant(1)
    right = Polynomial()
    for k in range(n + 1):
        weight = Fraction(binom(n, k)) * bernoulli(n - k) / (k + 1)
        right = right + (shifted ** (k + 1) - T ** (k + 1)) * weight
    return right == T**n


def phi_from_oracle(C: StructureConstants, D: int, threads: Optional[int] = None) -> PhiMatrix:
    """
    Reassemble phi from the right-invariant sharp maps.

    Entry (i, j) is sum_a v_j(a)_i / a! x^a t^|a|, where v_j is the sharp map of
    D_{e_j}; it equals the swapped phi of the realization.

    Args:
        C: Structure constants
        D: Degree bound
        threads: Worker threads for the monomial fan-out

    Returns:
        PhiMatrix: x-only entries through t^D
    """
    n = C.dim
    algebra = PBWAlgebra(C, D)
    zeros = (0,) * n
    entries: List[List[Dict[MonomialKey, Fraction]]] = [[{} for _ in range(n)] for _ in range(n)]
    for j in range(n):
        sharp = coderivation_sharp(C, j, D, Convention.RIGHT_INVARIANT, algebra, threads)
        for alpha, vector in sharp.table.items():
            scale = Fraction(1, _alpha_factorial(alpha))
            for i, component in enumerate(vector):
                if component:
                    entries[i][j][(alpha, zeros, sum(alpha))] = component * scale
    logger.debug(f"Reassembled phi of {C.label} from the enveloping algebra through degree {D}")
    return PhiMatrix(dim=n, order=D, entries=[[WeylElement(n, D, entries[i][j]) for j in range(n)] for i in range(n)])


def derivation_elements(C: StructureConstants, D: int) -> List[WeylElement]:
    """
    The vector fields D_{e_j} = sum_i P^i_j(x) d^i built from the oracle table.

    Args:
        C: Structure constants
        D: Degree bound

    Returns:
        List[WeylElement]: D_{e_1} .. D_{e_n}
    """
    phi = phi_from_oracle(C, D)
    n = C.dim
    fields = []
    for j in range(n):
        total = WeylElement.zero(n, D)
        for i in range(n):
            total = total + normal_mul(phi.entries[i][j], WeylElement.partial(n, D, i))
        fields.append(total)
    return fields


def derivation_closure_check(C: StructureConstants, D: int) -> bool:
    """Check [D_mu, D_nu] = -sum_rho C^rho_{mu nu} t D_rho and D_j|_(x=0) = d^j."""
    fields = derivation_elements(C, D)
    n = C.dim
    for j in range(n):
        if at_origin(fields[j]) != WeylElement.partial(n, D, j):
            return False
    for mu in range(n):
        for nu in range(mu + 1, n):
            expected = WeylElement.zero(n, D)
            for rho, coefficient in C.bracket(mu, nu).items():
                expected = expected - fields[rho].shift(1).scale(coefficient)
            if commutator(fields[mu], fields[nu]) != expected:
                logger.debug(f"Derivation closure fails on {C.label} at ({mu + 1}, {nu + 1})")
                return False
    return True


def cross_oracle_check(C: StructureConstants, D: int) -> bool:
    """phi_from_oracle(C, D) equals the swapped phi_series(C, D) entrywise."""
    return phi_from_oracle(C, D).entries == swapped(phi_series(C, D)).entries
