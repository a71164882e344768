"""
Concrete chain tensors built from actual structure constants.

    Z^{l,m,k}[g][mu][nu] = (bC^l)^a_mu (bC^m)^b_nu C^c_{ab} t (bC^k)^g_c - (mu <-> nu)
    b_k = Z^{k,N-k-1,0},  M_k = Z^{k,0,N-k-1}

Entries are d-only Weyl elements of pure t-degree N = l + m + k + 1.
"""
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Tuple

from loguru import logger

from lie2weyl.chains.calculus import ChainKind, chain_reduce, k_sum_closed
from lie2weyl.core.rational import binom
from lie2weyl.lie.models import StructureConstants
from lie2weyl.realization.phi import Matrix, c_powers
from lie2weyl.utils.errors import PreconditionError
from lie2weyl.weyl.element import WeylElement, normal_mul
from lie2weyl.weyl.operations import delta_derivative

Tensor = List[List[List[WeylElement]]]


class ConcreteCheck(str, Enum):
    """Identities checked on concrete tensors."""

    SHIFTD = "shiftd"
    ENSURES_ODD = "ensuresOdd"
    CHAIN_CONSISTENCY = "chain-consistency"
    MB_IDENTIFICATION = "mb-identification"
    SU2_EQUAL = "su2-equal"


class TensorBuilder:
    """Concrete Z, b and M tensors of one algebra, sharing the powers of bC."""

    def __init__(self, C: StructureConstants, N: int):
        if N < 1:
            raise PreconditionError(f"Chain order must be at least 1, got {N}")
        self.C = C
        self.N = N
        self.n = C.dim
        self.order = N + 2
        self.powers = c_powers(C, N + 1, self.order)
        self._cache: Dict[Tuple[int, int, int], Tensor] = {}

    def zero(self) -> WeylElement:
        return WeylElement.zero(self.n, self.order)

    def _bracket(self, u: List[WeylElement], v: List[WeylElement]) -> List[WeylElement]:
        """w^c = sum_{a,b} C^c_{ab} t u^a v^b"""
        w = [self.zero() for _ in range(self.n)]
        for a, b, c, coefficient in self.C.nonzero():
            if u[a].is_zero() or v[b].is_zero():
                continue
            w[c] = w[c] + normal_mul(u[a], v[b]).shift(1).scale(coefficient)
        return w

    def _apply(self, power: Matrix, w: List[WeylElement]) -> List[WeylElement]:
        result = []
        for g in range(self.n):
            total = self.zero()
            for c in range(self.n):
                if not w[c].is_zero() and not power[g][c].is_zero():
                    total = total + normal_mul(power[g][c], w[c])
            result.append(total)
        return result

    def z(self, l: int, m: int, k: int) -> Tensor:
        """Z^{l,m,k} as tensor[g][mu][nu]."""
        key = (l, m, k)
        if key in self._cache:
            return self._cache[key]
        n = self.n
        columns = {(p, i): [self.powers[p][a][i] for a in range(n)] for p in {l, m} for i in range(n)}
        half = [
            [self._apply(self.powers[k], self._bracket(columns[(l, mu)], columns[(m, nu)])) for nu in range(n)]
            for mu in range(n)
        ]
        tensor = [[[half[mu][nu][g] - half[nu][mu][g] for nu in range(n)] for mu in range(n)] for g in range(n)]
        self._cache[key] = tensor
        return tensor

    def b(self, i: int) -> Tensor:
        return self.z(i, self.N - i - 1, 0)

    def M(self, i: int) -> Tensor:
        return self.z(i, 0, self.N - i - 1)

    def combination(self, expr_values: List[Fraction], kind: ChainKind) -> Tensor:
        """sum_i values[i] b_i (or M_i) as a concrete tensor."""
        n = self.n
        total = [[[self.zero() for _ in range(n)] for _ in range(n)] for _ in range(n)]
        for i, coefficient in enumerate(expr_values):
            if not coefficient:
                continue
            part = self.b(i) if kind == ChainKind.B else self.M(i)
            total = [
                [[total[g][mu][nu] + part[g][mu][nu].scale(coefficient) for nu in range(n)] for mu in range(n)]
                for g in range(n)
            ]
        return total


def _shiftd(builder: TensorBuilder, L: int) -> bool:
    """bC^r_nu C^a_{mu r} (bC^L)^g_a - (mu <-> nu) = C^s_{mu nu} (bC^(L+1))^g_s"""
    C, n, P = builder.C, builder.n, builder.powers
    for mu in range(n):
        for nu in range(mu + 1, n):
            for g in range(n):
                left = builder.zero()
                for first, second in ((mu, nu), (nu, mu)):
                    sign = 1 if first == mu else -1
                    for r in range(n):
                        for a, coefficient in C.bracket(first, r).items():
                            term = normal_mul(P[1][r][second], P[L][g][a]).shift(1).scale(coefficient * sign)
                            left = left + term
                right = builder.zero()
                for s, coefficient in C.bracket(mu, nu).items():
                    right = right + P[L + 1][g][s].shift(1).scale(coefficient)
                if left != right:
                    return False
    return True


def _ensures_odd(builder: TensorBuilder, L: int) -> bool:
    """C^g_{mu r} (bC^L)^r_nu + bC^r_nu d_r (bC^L)^g_mu - (mu <-> nu) = 2 C^s_{mu nu} (bC^L)^g_s"""
    C, n, P = builder.C, builder.n, builder.powers
    for mu in range(n):
        for nu in range(mu + 1, n):
            for g in range(n):
                left = builder.zero()
                for first, second, sign in ((mu, nu, 1), (nu, mu, -1)):
                    for r in range(n):
                        coefficient = C.coefficient(first, r, g)
                        if coefficient:
                            left = left + P[L][r][second].shift(1).scale(coefficient * sign)
                        derivative = delta_derivative(P[L][g][first], r)
                        if not derivative.is_zero():
                            left = left + normal_mul(P[1][r][second], derivative).scale(sign)
                right = builder.zero()
                for s, coefficient in C.bracket(mu, nu).items():
                    right = right + P[L][g][s].shift(1).scale(2 * coefficient)
                if left != right:
                    return False
    return True


def _equal(left: Tensor, right: Tensor) -> bool:
    return all(
        left[g][mu][nu] == right[g][mu][nu]
        for g in range(len(left))
        for mu in range(len(left))
        for nu in range(len(left))
    )


def _chain_consistency(builder: TensorBuilder) -> bool:
    N = builder.N
    for l in range(N):
        for m in range(N - l):
            k = N - 1 - l - m
            tensor = builder.z(l, m, k)
            b_form = [Fraction(binom(k, j - l)) for j in range(N)]
            if not _equal(tensor, builder.combination(b_form, ChainKind.B)):
                return False
            m_form = list(chain_reduce(l, m, k, ChainKind.M).coefficients)
            if not _equal(tensor, builder.combination(m_form, ChainKind.M)):
                return False
            if not _equal(tensor, builder.z(m, l, k)):
                return False
            reduced = list(chain_reduce(l, m, k, ChainKind.B).coefficients)
            if not _equal(tensor, builder.combination(reduced, ChainKind.B)):
                return False
    return True


def _mb_identification(builder: TensorBuilder) -> bool:
    N = builder.N
    for k in range(N):
        expansion = [Fraction(binom(k, i)) for i in range(N)]
        if not _equal(builder.M(N - k - 1), builder.combination(expansion, ChainKind.B)):
            return False
    k0n = builder.combination([Fraction(1)] * N, ChainKind.M)
    return _equal(k0n, builder.combination(list(k_sum_closed(0, N).coefficients), ChainKind.B))


def _su2_equal(builder: TensorBuilder) -> bool:
    N = builder.N
    n = builder.n
    first = builder.M(0)
    halved = [[[first[g][mu][nu].scale(Fraction(1, 2)) for nu in range(n)] for mu in range(n)] for g in range(n)]
    return all(_equal(halved, builder.M(i)) for i in range(1, N))


def concrete_tensor_check(C: StructureConstants, N: int, which: ConcreteCheck) -> bool:
    """
    Check a chain identity on the concrete tensors of C at order N.

    Args:
        C: Structure constants
        N: Chain order
        which: Identity to check; shiftd and ensuresOdd run for every L <= N

    Returns:
        bool: True iff the identity holds on every index triple
    """
    which = ConcreteCheck(which)
    builder = TensorBuilder(C, N)
    if which == ConcreteCheck.SHIFTD:
        result = all(_shiftd(builder, L) for L in range(N + 1))
    elif which == ConcreteCheck.ENSURES_ODD:
        result = all(_ensures_odd(builder, L) for L in range(N + 1))
    elif which == ConcreteCheck.CHAIN_CONSISTENCY:
        result = _chain_consistency(builder)
    elif which == ConcreteCheck.MB_IDENTIFICATION:
        result = _mb_identification(builder)
    else:
        result = _su2_equal(builder)
    logger.debug(f"Concrete {which.value} on {C.label} at N={N}: {result}")
    return result
