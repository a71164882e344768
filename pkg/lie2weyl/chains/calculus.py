"""
The formal calculus of Z-, M- and b-chains of order N.

Z^{l,m,k} with l + m + k + 1 = N expands either over the M-chains,

    Z^{l,m,k} = sum_j (-1)^j binom(m, j) M_{l+j},

or over the b-chains,

    Z^{l,m,k} = sum_j binom(k, j) b_{l+j},

and the b-module is presented by the relations b_i = b_{N-1-i}. A reduced
b-chain keeps only the coefficients 0 .. floor((N-1)/2).
"""
from enum import Enum
from fractions import Fraction
from typing import List, Sequence, Tuple

import sympy
from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, model_validator

from lie2weyl.core.bernoulli import even_coefficient, expansion_coefficient
from lie2weyl.core.rational import binom
from lie2weyl.utils.errors import PreconditionError


class ChainKind(str, Enum):
    """Basis a chain expression is written in."""

    B = "b"
    M = "M"


class ChainExpr(BaseModel):
    """A Q-linear combination of b_0..b_{N-1} or M_0..M_{N-1}."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    order: int = Field(..., ge=1, description="Chain order N")
    kind: ChainKind = Field(..., description="b-chains or M-chains")
    coefficients: Tuple[Fraction, ...] = Field(..., description="Coefficient of the i-th chain, i = 0..N-1")

    @model_validator(mode="after")
    def _check_length(self) -> "ChainExpr":
        if len(self.coefficients) != self.order:
            raise ValueError(f"A chain of order {self.order} needs {self.order} coefficients")
        return self

    @classmethod
    def basis(cls, kind: ChainKind, N: int, i: int) -> "ChainExpr":
        return cls.from_list(kind, N, [Fraction(int(j == i)) for j in range(N)])

    @classmethod
    def zero(cls, kind: ChainKind, N: int) -> "ChainExpr":
        return cls.from_list(kind, N, [Fraction(0)] * N)

    @classmethod
    def from_list(cls, kind: ChainKind, N: int, values: Sequence[Fraction]) -> "ChainExpr":
        return cls(order=N, kind=kind, coefficients=tuple(Fraction(v) for v in values))

    def _combine(self, other: "ChainExpr", sign: int) -> "ChainExpr":
        if self.kind != other.kind or self.order != other.order:
            raise PreconditionError("Chains of different kind or order cannot be combined")
        values = [p + sign * q for p, q in zip(self.coefficients, other.coefficients)]
        return ChainExpr.from_list(self.kind, self.order, values)

    def __add__(self, other: "ChainExpr") -> "ChainExpr":
        return self._combine(other, 1)

    def __sub__(self, other: "ChainExpr") -> "ChainExpr":
        return self._combine(other, -1)

    def scale(self, value: Fraction) -> "ChainExpr":
        return ChainExpr.from_list(self.kind, self.order, [c * value for c in self.coefficients])

    def reduced(self) -> "ChainExpr":
        """Fold b_i onto b_{N-1-i} for i above the middle; M-chains are free."""
        if self.kind == ChainKind.M:
            return self
        N = self.order
        values = list(self.coefficients)
        for i in range(N - 1, (N - 1) // 2, -1):
            values[N - 1 - i] += values[i]
            values[i] = Fraction(0)
        return ChainExpr.from_list(self.kind, N, values)

    def folded(self) -> List[Fraction]:
        """Reduced coefficients 0 .. ceil(N/2) - 1 of a b-chain."""
        return list(self.reduced().coefficients[: (self.order + 1) // 2])

    def is_zero(self) -> bool:
        return not any(self.reduced().coefficients)

    def render(self) -> str:
        terms = [f"{c}*{self.kind.value}{i}" for i, c in enumerate(self.coefficients) if c]
        return " + ".join(terms) if terms else "0"


def _check_indices(l: int, m: int, k: int) -> int:
    if min(l, m, k) < 0:
        raise PreconditionError(f"Chain indices must be non-negative, got ({l}, {m}, {k})")
    return l + m + k + 1


def _z_unreduced(l: int, m: int, k: int, target: ChainKind) -> ChainExpr:
    N = _check_indices(l, m, k)
    values = [Fraction(0)] * N
    if target == ChainKind.M:
        for j in range(m + 1):
            values[l + j] += (-1) ** j * binom(m, j)
    else:
        for j in range(k + 1):
            values[l + j] += binom(k, j)
    return ChainExpr.from_list(target, N, values)


def chain_reduce(l: int, m: int, k: int, target: ChainKind) -> ChainExpr:
    """
    Z^{l,m,k} as an M-chain or a reduced b-chain.

    Args:
        l, m, k: Non-negative indices, N = l + m + k + 1
        target: Basis of the result

    Returns:
        ChainExpr: The expansion, reduced when target is b
    """
    return _z_unreduced(l, m, k, target).reduced()


def m_to_b(expr: ChainExpr) -> ChainExpr:
    """Push an M-chain through M_p = sum_i binom(N-1-p, i) b_i and reduce."""
    if expr.kind == ChainKind.B:
        return expr.reduced()
    N = expr.order
    values = [Fraction(0)] * N
    for p, coefficient in enumerate(expr.coefficients):
        if coefficient:
            for i in range(N - p):
                values[i] += coefficient * binom(N - 1 - p, i)
    return ChainExpr.from_list(ChainKind.B, N, values).reduced()


def _k_definitional(I: int, N: int) -> ChainExpr:
    """K_{I,N-I} = sum_{l<I} Z^{l,N-I,I-l-1}, any 1 <= I <= N."""
    total = ChainExpr.zero(ChainKind.B, N)
    for l in range(I):
        total = total + chain_reduce(l, N - I, I - l - 1, ChainKind.B)
    return total


def k_sum(I: int, N: int) -> ChainExpr:
    """
    K_{I,N-I} from its defining Z-sum, reduced over the b-chains.

    K_{0,N} is the sum M_0 + ... + M_{N-1} pushed to the b-chains.

    Args:
        I: 0 <= I <= N/2
        N: Chain order

    Returns:
        ChainExpr: Reduced b-chain
    """
    if N < 1 or I < 0 or 2 * I > N:
        raise PreconditionError(f"k_sum needs 0 <= I <= N/2, got I={I}, N={N}")
    if I == 0:
        return m_to_b(ChainExpr.from_list(ChainKind.M, N, [Fraction(1)] * N))
    return _k_definitional(I, N)


def k_sum_closed(I: int, N: int) -> ChainExpr:
    """
    Closed forms K_{I,N-I} = sum_{i<I} binom(I, i) b_i and
    K_{0,N} = sum_{i<floor(N/2)} binom(N+1, i+1) b_i (+ binom(N, (N+1)/2) b_mid for odd N).
    """
    if N < 1 or I < 0 or 2 * I > N:
        raise PreconditionError(f"k_sum_closed needs 0 <= I <= N/2, got I={I}, N={N}")
    values = [Fraction(0)] * N
    if I == 0:
        for i in range(N // 2):
            values[i] = Fraction(binom(N + 1, i + 1))
        if N % 2:
            values[(N - 1) // 2] = Fraction(binom(N, (N + 1) // 2))
    else:
        for i in range(I):
            values[i] = Fraction(binom(I, i))
    return ChainExpr.from_list(ChainKind.B, N, values)


def special_symmetry(k: int, N: int) -> ChainExpr:
    """X_k = Z^{k,k+1,N-2k-2} - Z^{k+1,k,N-2k-2} over the M-chains, 0 <= k <= N/2 - 1."""
    if k < 0 or 2 * k + 2 > N:
        raise PreconditionError(f"special_symmetry needs 0 <= k <= N/2 - 1, got k={k}, N={N}")
    return general_symmetry(k, 1, N)


def general_symmetry(j: int, s: int, N: int) -> ChainExpr:
    """X^{(s)}_j = Z^{j,j+s,*} - Z^{j+s,j,*} over the M-chains, 2j + s + 1 <= N."""
    rest = N - 1 - 2 * j - s
    if j < 0 or s < 1 or rest < 0:
        raise PreconditionError(f"general_symmetry needs 2j + s + 1 <= N, got j={j}, s={s}, N={N}")
    return chain_reduce(j, j + s, rest, ChainKind.M) - chain_reduce(j + s, j, rest, ChainKind.M)


def symmetry_expansion_check(j: int, s: int, N: int) -> bool:
    """X^{(s)}_j = sum_k (-1)^k binom(s-k-1, k) X_{j+k}, coefficientwise in the free M-module."""
    expected = ChainExpr.zero(ChainKind.M, N)
    for k in range((s - 1) // 2 + 1):
        weight = (-1) ** k * binom(s - k - 1, k)
        if weight:
            expected = expected + special_symmetry(j + k, N).scale(Fraction(weight))
    return general_symmetry(j, s, N) == expected


def central_relation_check(l: int, m: int, k: int) -> bool:
    """Z^{l,m+1,k} = Z^{l,m,k+1} - Z^{l+1,m,k} over both bases."""
    for kind in ChainKind:
        left = chain_reduce(l, m + 1, k, kind)
        right = chain_reduce(l, m, k + 1, kind) - chain_reduce(l + 1, m, k, kind)
        if left != right:
            return False
    return True


def jsi_check(j: int, s: int, i: int) -> bool:
    """
    binom(j+s, i) - (-1)^s binom(j, i-s)
        = sum_k binom(s-k-1, k) [binom(j+k+1, i-k) + binom(j+k, i-k-1)]
    """
    if min(i, j, s) < 1:
        raise PreconditionError(f"jsi_check needs i, j, s >= 1, got i={i}, j={j}, s={s}")
    left = binom(j + s, i) - (-1) ** s * binom(j, i - s)
    right = sum(binom(s - k - 1, k) * (binom(j + k + 1, i - k) + binom(j + k, i - k - 1)) for k in range(s))
    return left == right


def _rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows:
        return 0
    matrix = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in rows])
    return int(matrix.rank())


def _all_triples(N: int) -> List[Tuple[int, int, int]]:
    return [(l, m, N - 1 - l - m) for l in range(N) for m in range(N - l)]


def z_dimension(N: int) -> int:
    """Rank over Q of every reduced Z^{l,m,k} with l + m + k + 1 = N."""
    if N < 1:
        raise PreconditionError(f"z_dimension needs N >= 1, got {N}")
    rows = [chain_reduce(l, m, k, ChainKind.B).folded() for l, m, k in _all_triples(N)]
    return _rank(rows)


def symmetry_relations_check(N: int) -> bool:
    """Every Z^{l,m,k} - Z^{m,l,k} lies in the span of b_i - b_{N-1-i} in the unreduced b-module."""
    relations = []
    for i in range(N // 2):
        row = [Fraction(0)] * N
        row[i] += 1
        row[N - 1 - i] -= 1
        relations.append(row)
    base = _rank(relations)
    for l, m, k in _all_triples(N):
        difference = _z_unreduced(l, m, k, ChainKind.B) - _z_unreduced(m, l, k, ChainKind.B)
        if _rank(relations + [list(difference.coefficients)]) != base:
            logger.debug(f"Symmetry Z^({l},{m},{k}) - Z^({m},{l},{k}) leaves the relation span at N={N}")
            return False
    return True


def special_symmetry_rank(N: int) -> int:
    """Rank of the rows X_0 .. X_{floor(N/2)-1} in the free M-module."""
    return _rank([list(special_symmetry(k, N).coefficients) for k in range(N // 2)])


def order_condition_chain(N: int) -> ChainExpr:
    """
    sum_{I=1}^{N} A_I A_{N-I} K_{I,N-I} - (A_{N-1}/2) M_0 as a reduced b-chain.

    With A_I = (-1)^I B_I / I! this is the zero chain for every N >= 1.
    """
    if N < 1:
        raise PreconditionError(f"order_condition_chain needs N >= 1, got {N}")
    A = [expansion_coefficient(I) for I in range(N + 1)]
    total = ChainExpr.zero(ChainKind.B, N)
    for I in range(1, N + 1):
        weight = A[I] * A[N - I]
        if weight:
            total = total + _k_definitional(I, N).scale(weight)
    total = total - chain_reduce(0, 0, N - 1, ChainKind.B).scale(A[N - 1] / 2)
    return total.reduced()


def even_order_check(N: int) -> bool:
    """
    For even N >= 4, check alpha_i = 0 for 0 <= i <= N/2 - 1 where

        alpha_i = sum_{k=0}^{N/2-1-floor(i/2)} beta_{2k} beta_{N-2k} binom(N-2k, i)
                + sum_{l=0}^{floor(i/2)} beta_{2l} beta_{N-2l} binom(N-2l, i-2l+1)

    and beta_n = B_n / n!.
    """
    if N < 4 or N % 2:
        raise PreconditionError(f"even_order_check needs an even N >= 4, got {N}")
    beta = [even_coefficient(n) for n in range(N + 1)]
    for i in range(N // 2):
        alpha = Fraction(0)
        for k in range(N // 2 - i // 2):
            alpha += beta[2 * k] * beta[N - 2 * k] * binom(N - 2 * k, i)
        for l in range(i // 2 + 1):
            alpha += beta[2 * l] * beta[N - 2 * l] * binom(N - 2 * l, i - 2 * l + 1)
        if alpha != 0:
            logger.debug(f"alpha_{i} = {alpha} at N={N}")
            return False
    return True
