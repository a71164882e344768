"""
The matrix bC, the series phi and the generator images Phi_lambda(X_i).

    bC^i_j = sum_k C^i_{jk} d^k t
    phi    = sum_N (-1)^N B_N / N! bC^N
    Phi_lambda(X_i) = lambda x_a phi^a_i + (1 - lambda) phi^a_i x_a

Matrix entries live in the commutative subalgebra Q[d][t], and bC^N has pure
t-degree N, so phi truncated at t^T needs the powers N <= T only.
"""
from fractions import Fraction
from typing import List, Optional

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from lie2weyl.core.bernoulli import expansion_coefficient
from lie2weyl.core.rational import format_rational
from lie2weyl.lie.models import StructureConstants
from lie2weyl.utils.config import config
from lie2weyl.utils.errors import DimensionMismatchError, PreconditionError
from lie2weyl.utils.parallel import parallel_map
from lie2weyl.weyl.element import WeylElement, normal_mul
from lie2weyl.weyl.operations import swap_automorphism

Matrix = List[List[WeylElement]]


class PhiMatrix(BaseModel):
    """n x n matrix phi^a_b of Weyl elements known through t^order."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    dim: int = Field(..., gt=0, description="Dimension n")
    order: int = Field(..., ge=0, description="Truncation order T in t")
    entries: List[List[WeylElement]] = Field(..., description="entries[a][b] = phi^a_b")

    def entry(self, a: int, b: int) -> WeylElement:
        return self.entries[a][b]

    def degree_part(self, d: int) -> Matrix:
        """The t-degree d part of every entry."""
        return [[entry.t_degree(d) for entry in row] for row in self.entries]


class RealizationResult(BaseModel):
    """JSON form of a realization."""

    model_config = ConfigDict(populate_by_name=True)

    algebra: str = Field(..., description="Label of the algebra")
    lambda_: str = Field(..., alias="lambda", description="The parameter lambda as p/q")
    order: int = Field(..., description="Truncation order T")
    generators: List[str] = Field(..., description="Canonical text of Phi_lambda(X_i), in basis order")


def check_order(T: int) -> None:
    """Reject truncation orders outside 0..max_order."""
    if T < 0:
        raise PreconditionError(f"Truncation order must be non-negative, got {T}")
    if T > config.engine.max_order:
        raise PreconditionError(f"Truncation order {T} exceeds the configured cap {config.engine.max_order}")


def identity_matrix(n: int, order: int) -> Matrix:
    return [[WeylElement.scalar(n, order, int(i == j)) for j in range(n)] for i in range(n)]


def zero_matrix(n: int, order: int) -> Matrix:
    return [[WeylElement.zero(n, order) for _ in range(n)] for _ in range(n)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    """Product of square matrices of Weyl elements."""
    n = len(A)
    if len(B) != n:
        raise DimensionMismatchError(f"Cannot multiply {n} x {n} and {len(B)} x {len(B)} matrices")
    result = []
    for i in range(n):
        row = []
        for j in range(n):
            total = None
            for k in range(n):
                if A[i][k].is_zero() or B[k][j].is_zero():
                    continue
                product = normal_mul(A[i][k], B[k][j])
                total = product if total is None else total + product
            row.append(total if total is not None else WeylElement.zero(A[i][j].dim, A[i][j].order))
        result.append(row)
    return result


def c_matrix(C: StructureConstants, order: int = 1) -> Matrix:
    """
    The matrix bC^i_j = sum_k C^i_{jk} d^k t.

    Args:
        C: Structure constants
        order: Truncation order of the entries; at order 0 every entry is zero

    Returns:
        Matrix: entries[i][j] = bC^i_j
    """
    n = C.dim
    zeros = (0,) * n
    terms: List[List[dict]] = [[{} for _ in range(n)] for _ in range(n)]
    for j, k, i, coefficient in C.nonzero():
        b = tuple(int(m == k) for m in range(n))
        terms[i][j][(zeros, b, 1)] = coefficient
    return [[WeylElement(n, order, terms[i][j]) for j in range(n)] for i in range(n)]


def c_powers(C: StructureConstants, N: int, order: int) -> List[Matrix]:
    """bC^0 .. bC^N, each truncated at t^order."""
    powers = [identity_matrix(C.dim, order)]
    base = c_matrix(C, order)
    for power in range(1, N + 1):
        if power > order:
            powers.append(zero_matrix(C.dim, order))
            continue
        powers.append(matmul(powers[-1], base))
    return powers


def phi_series(C: StructureConstants, T: int, threads: Optional[int] = None) -> PhiMatrix:
    """
    The series phi = sum_N A_N bC^N through t^T, A_N = (-1)^N B_N / N!.

    Args:
        C: Structure constants
        T: Truncation order
        threads: Worker threads for the column fan-out

    Returns:
        PhiMatrix: phi with t-degree 0 part the identity
    """
    check_order(T)
    n = C.dim
    powers = c_powers(C, T, T)
    coefficients = [expansion_coefficient(N) for N in range(T + 1)]

    def column(j: int) -> List[WeylElement]:
        entries = []
        for i in range(n):
            total = WeylElement.zero(n, T)
            for N, power in enumerate(powers):
                if coefficients[N] and not power[i][j].is_zero():
                    total = total + power[i][j].scale(coefficients[N])
            entries.append(total)
        return entries

    columns = parallel_map(column, range(n), threads)
    logger.debug(f"Built phi for {C.label} through t^{T}")
    return PhiMatrix(dim=n, order=T, entries=[[columns[j][i] for j in range(n)] for i in range(n)])


def realize(
    C: StructureConstants, lam: Fraction = Fraction(1), T: Optional[int] = None, threads: Optional[int] = None
) -> List[WeylElement]:
    """
    Generator images Phi_lambda(X_i) in A_n[[t]].

    The second summand multiplies phi^a_i on the left of x_a and normal orders
    the product.

    Args:
        C: Structure constants
        lam: The parameter lambda
        T: Truncation order
        threads: Worker threads for the per-generator fan-out

    Returns:
        List[WeylElement]: Phi_lambda(X_1) .. Phi_lambda(X_n)
    """
    lam = Fraction(lam)
    T = config.engine.default_order if T is None else T
    phi = phi_series(C, T, threads)
    n = C.dim
    xs = [WeylElement.x(n, T, a) for a in range(n)]

    def image(i: int) -> WeylElement:
        left = WeylElement.zero(n, T)
        right = WeylElement.zero(n, T)
        for a in range(n):
            entry = phi.entries[a][i]
            if entry.is_zero():
                continue
            if lam != 0:
                left = left + normal_mul(xs[a], entry)
            if lam != 1:
                right = right + normal_mul(entry, xs[a])
        return left.scale(lam) + right.scale(1 - lam)

    images = parallel_map(image, range(n), threads)
    logger.info(f"Realized {C.label} at lambda={format_rational(lam)} through t^{T}")
    return images


def swapped(phi: PhiMatrix) -> PhiMatrix:
    """Entrywise image under x -> -d, d -> x."""
    return PhiMatrix(
        dim=phi.dim, order=phi.order, entries=[[swap_automorphism(entry) for entry in row] for row in phi.entries]
    )


def realization_result(
    C: StructureConstants, lam: Fraction, T: int, threads: Optional[int] = None
) -> RealizationResult:
    """Realize C and package the canonical text of every image."""
    images = realize(C, lam, T, threads)
    return RealizationResult(
        algebra=C.label, lambda_=format_rational(Fraction(lam)), order=T, generators=[u.render() for u in images]
    )
