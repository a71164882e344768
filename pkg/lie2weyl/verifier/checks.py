"""
Identity checks for the realization.

Every check compares exact elements of A_n[[t]] truncated at a common order;
a structure constant always carries one factor of t.
"""
import time
from fractions import Fraction
from itertools import combinations
from typing import List, Optional, Tuple

from loguru import logger

from lie2weyl.core.bernoulli import expansion_coefficient
from lie2weyl.core.rational import format_rational
from lie2weyl.lie.models import BasisTransform, StructureConstants
from lie2weyl.lie.transform import transform
from lie2weyl.lie.validation import validate
from lie2weyl.realization.phi import PhiMatrix, c_powers, check_order, phi_series, realize
from lie2weyl.utils.errors import DimensionMismatchError, PreconditionError
from lie2weyl.utils.parallel import parallel_map
from lie2weyl.verifier.models import IdentityReport, PairResidual, VerificationMode, VerificationReport
from lie2weyl.weyl.element import WeylElement, normal_mul
from lie2weyl.weyl.operations import commutator, delta_derivative, substitute_partials


def _pairs(n: int) -> List[Tuple[int, int]]:
    return list(combinations(range(n), 2))


def _bracket_image(C: StructureConstants, images: List[WeylElement], mu: int, nu: int, order: int) -> WeylElement:
    """sum_rho C^rho_{mu nu} t images[rho]"""
    total = WeylElement.zero(C.dim, order)
    for rho, coefficient in C.bracket(mu, nu).items():
        total = total + images[rho].shift(1).scale(coefficient)
    return total


def check_commutators(
    C: StructureConstants, lam: Fraction = Fraction(1), T: int = 6, threads: Optional[int] = None
) -> VerificationReport:
    """
    Verify [Phi_mu, Phi_nu] = sum_rho C^rho_{mu nu} t Phi_rho through t^T.

    Args:
        C: Structure constants
        lam: The parameter lambda
        T: Truncation order
        threads: Worker threads for the pair fan-out

    Returns:
        VerificationReport: Residuals for every mu < nu
    """
    started = time.perf_counter()
    lam = Fraction(lam)
    images = realize(C, lam, T, threads)

    def residual(pair: Tuple[int, int]) -> PairResidual:
        mu, nu = pair
        value = commutator(images[mu], images[nu]) - _bracket_image(C, images, mu, nu, T)
        if not value.is_zero():
            logger.debug(f"Nonzero residual for ({mu + 1}, {nu + 1}) on {C.label}: {value}")
        return PairResidual(mu=mu + 1, nu=nu + 1, residual=value.render())

    pairs = parallel_map(residual, _pairs(C.dim), threads)
    gated = lam == 1 or validate(C).totally_antisymmetric
    report = VerificationReport(
        algebra=C.label,
        lambda_=format_rational(lam),
        order=T,
        passed=all(pair.vanishes for pair in pairs),
        pairs=pairs,
        mode=VerificationMode.GATED if gated else VerificationMode.REPORT,
        timing=time.perf_counter() - started,
    )
    logger.info(
        f"Commutators of {C.label} at lambda={report.lambda_}, T={T}: "
        f"{'pass' if report.passed else 'FAIL'} ({report.mode.value})"
    )
    return report


def _pde_sides(phi: PhiMatrix, C: StructureConstants, gamma: int, mu: int, nu: int) -> Tuple[WeylElement, WeylElement]:
    n, T = phi.dim, phi.order
    left = WeylElement.zero(n, T)
    for rho in range(n):
        left = left + normal_mul(delta_derivative(phi.entries[gamma][mu], rho), phi.entries[rho][nu])
        left = left - normal_mul(delta_derivative(phi.entries[gamma][nu], rho), phi.entries[rho][mu])
    right = WeylElement.zero(n, T)
    for sigma, coefficient in C.bracket(mu, nu).items():
        right = right + phi.entries[gamma][sigma].shift(1).scale(coefficient)
    return left, right


def check_pde(C: StructureConstants, T: int) -> IdentityReport:
    """
    Verify (d_rho phi^g_mu) phi^rho_nu - (d_rho phi^g_nu) phi^rho_mu = C^s_{mu nu} phi^g_s.

    Args:
        C: Structure constants
        T: Truncation order

    Returns:
        IdentityReport: Failing (gamma, mu, nu) triples
    """
    phi = phi_series(C, T)
    witnesses = []
    for gamma in range(C.dim):
        for mu, nu in _pairs(C.dim):
            left, right = _pde_sides(phi, C, gamma, mu, nu)
            if left != right:
                witnesses.append(f"gamma={gamma + 1} mu={mu + 1} nu={nu + 1}: {left - right}")
    return IdentityReport(
        name="pde", parameters={"algebra": C.label, "order": T}, witnesses=witnesses, passed=not witnesses
    )


def check_order_condition(C: StructureConstants, N: int) -> bool:
    """
    Verify the order-N condition on the coefficients A_I = (-1)^I B_I / I!.

    sum_{I=1}^{N} A_I A_{N-I} {[d_rho (bC^I)^g_mu] (bC^{N-I})^rho_nu - (mu <-> nu)}
        = A_{N-1} C^s_{mu nu} (bC^{N-1})^g_s

    Args:
        C: Structure constants
        N: Order, at least 1

    Returns:
        bool: True iff the identity holds for all (gamma, mu, nu)
    """
    if N < 1:
        raise PreconditionError(f"The order condition needs N >= 1, got {N}")
    check_order(N)
    n = C.dim
    powers = c_powers(C, N, N)
    A = [expansion_coefficient(I) for I in range(N + 1)]
    for gamma in range(n):
        for mu, nu in _pairs(n):
            left = WeylElement.zero(n, N)
            for I in range(1, N + 1):
                weight = A[I] * A[N - I]
                if not weight:
                    continue
                for rho in range(n):
                    term = normal_mul(delta_derivative(powers[I][gamma][mu], rho), powers[N - I][rho][nu])
                    term = term - normal_mul(delta_derivative(powers[I][gamma][nu], rho), powers[N - I][rho][mu])
                    left = left + term.scale(weight)
            right = WeylElement.zero(n, N)
            for sigma, coefficient in C.bracket(mu, nu).items():
                right = right + powers[N - 1][gamma][sigma].shift(1).scale(coefficient * A[N - 1])
            if left != right:
                logger.debug(f"Order condition N={N} fails on {C.label} at ({gamma + 1}, {mu + 1}, {nu + 1})")
                return False
    return True


def _products(C: StructureConstants, T: int) -> Tuple[List[WeylElement], List[WeylElement]]:
    """P_mu = x_a phi^a_mu and Q_mu = phi^a_mu x_a."""
    phi = phi_series(C, T)
    n = C.dim
    xs = [WeylElement.x(n, T, a) for a in range(n)]
    P, Q = [], []
    for mu in range(n):
        p = WeylElement.zero(n, T)
        q = WeylElement.zero(n, T)
        for a in range(n):
            p = p + normal_mul(xs[a], phi.entries[a][mu])
            q = q + normal_mul(phi.entries[a][mu], xs[a])
        P.append(p)
        Q.append(q)
    return P, Q


def check_lambda_reflection(C: StructureConstants, T: int) -> bool:
    """
    Verify [P_mu, P_nu] + [Q_mu, Q_nu] = [P_mu, Q_nu] + [Q_mu, P_nu].

    Args:
        C: Structure constants
        T: Truncation order

    Returns:
        bool: True iff the four-bracket identity holds for every mu < nu
    """
    P, Q = _products(C, T)
    for mu, nu in _pairs(C.dim):
        left = commutator(P[mu], P[nu]) + commutator(Q[mu], Q[nu])
        right = commutator(P[mu], Q[nu]) + commutator(Q[mu], P[nu])
        if left != right:
            logger.debug(f"Lambda reflection fails on {C.label} at ({mu + 1}, {nu + 1})")
            return False
    return True


def check_covariance(C: StructureConstants, O: BasisTransform, T: int) -> bool:
    """
    Verify that phi transforms covariantly under a change of basis.

    phi(C')^s_r = (O^-1)^s_i phi(C)^i_j |_{d^b -> O^b_k d^k} O^j_r

    Args:
        C: Structure constants
        O: Basis transform of the same dimension
        T: Truncation order

    Returns:
        bool: True iff both sides agree entrywise
    """
    if C.dim != O.dim:
        raise DimensionMismatchError(f"Algebra has dimension {C.dim} but the transform has dimension {O.dim}")
    n = C.dim
    direct = phi_series(transform(C, O), T)
    phi = phi_series(C, T)
    substituted = [[substitute_partials(phi.entries[i][j], O.matrix) for j in range(n)] for i in range(n)]
    for s in range(n):
        for r in range(n):
            expected = WeylElement.zero(n, T)
            for i in range(n):
                if not O.inverse[s][i]:
                    continue
                for j in range(n):
                    weight = O.inverse[s][i] * O.matrix[j][r]
                    if weight:
                        expected = expected + substituted[i][j].scale(weight)
            if direct.entries[s][r] != expected:
                logger.debug(f"Covariance fails on {C.label} at entry ({s + 1}, {r + 1})")
                return False
    return True
