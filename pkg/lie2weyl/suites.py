"""
Identity suites for the lie2weyl engine.

This module runs the exact identity checks in four suites (hyperbolic, chains,
oracle and realization) and collects them into machine-readable reports. A
suite passes iff every gated entry passes; entries recorded as data never fail
it.
"""
import math
import random
import time
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field

from lie2weyl.chains import (
    ChainKind,
    ConcreteCheck,
    central_relation_check,
    chain_reduce,
    concrete_tensor_check,
    even_order_check,
    jsi_check,
    k_sum,
    k_sum_closed,
    m_to_b,
    order_condition_chain,
    special_symmetry_rank,
    symmetry_expansion_check,
    symmetry_relations_check,
    z_dimension,
)
from lie2weyl.core.bernoulli import convolution_identity_check
from lie2weyl.core.rational import format_rational
from lie2weyl.hyperbolic import coth_identity_check, functional_equation_check, functional_equation_rows
from lie2weyl.lie.catalog import default_catalog
from lie2weyl.lie.models import BasisTransform, StructureConstants
from lie2weyl.pbw import (
    Convention,
    cross_oracle_check,
    derivation_closure_check,
    dhxn_check,
    exp_tangent_check,
    sharp_polarization_check,
    teq_check,
)
from lie2weyl.utils.config import config
from lie2weyl.utils.parallel import parallel_map
from lie2weyl.verifier.checks import (
    check_commutators,
    check_covariance,
    check_lambda_reflection,
    check_order_condition,
    check_pde,
)
from lie2weyl.verifier.models import VerificationMode

# Largest N of the order condition in the consistency triangle
TRIANGLE_MAX_N = 8

# Bracket-degree order of the tangent-of-exp checks
TANGENT_ORDER = 5

# Largest truncation order of the lambda-family and reflection checks
LAMBDA_ORDER = 5

# Largest truncation order of the covariance checks
COVARIANCE_ORDER = 4

LAMBDA_FAMILY = (Fraction(0), Fraction(1, 2), Fraction(2))


class SuiteName(str, Enum):
    """Selectable identity suites."""

    HYPERBOLIC = "hyperbolic"
    CHAINS = "chains"
    ORACLE = "oracle"
    REALIZATION = "realization"
    ALL = "all"


class CheckResult(BaseModel):
    """Outcome of one identity check."""

    model_config = ConfigDict(populate_by_name=True)

    check: str = Field(..., description="Name of the check")
    parameters: Dict[str, Any] = Field(default_factory=dict, description="Parameters of the check")
    passed: bool = Field(..., alias="pass", description="Whether the check passed")
    gated: bool = Field(True, description="Whether a failure fails the suite")
    detail: Optional[str] = Field(None, description="Failing cases or recorded data")


class SuiteReport(BaseModel):
    """All checks of one suite."""

    model_config = ConfigDict(populate_by_name=True)

    suite: str = Field(..., description="Suite name")
    passed: bool = Field(..., alias="pass", description="True iff every gated check passed")
    checks: List[CheckResult] = Field(default_factory=list, description="Individual results")


class IdentitiesReport(BaseModel):
    """Reports of every suite in one run."""

    model_config = ConfigDict(populate_by_name=True)

    passed: bool = Field(..., alias="pass", description="True iff every suite passed")
    suites: List[SuiteReport] = Field(default_factory=list, description="Suite reports in run order")

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, exclude_none=True, indent=2) + "\n"


def _result(
    check: str, parameters: Dict[str, Any], passed: bool, gated: bool = True, detail: Optional[str] = None
) -> CheckResult:
    if gated and not passed:
        logger.warning(f"Identity check {check} failed: {parameters} {detail or ''}".rstrip())
    return CheckResult(check=check, parameters=parameters, passed=passed, gated=gated, detail=detail)


def _aggregate(check: str, parameters: Dict[str, Any], cases: Iterable[Any], fn: Callable[..., bool]) -> CheckResult:
    """Run fn over every case (a tuple of arguments) and list the failing ones."""
    failures = [case for case in cases if not fn(*case)]
    detail = None
    if failures:
        shown = ", ".join(str(case) for case in failures[:10])
        detail = f"{len(failures)} failing: {shown}"
    return _result(check, parameters, not failures, detail=detail)


def _suite(name: SuiteName, checks: List[CheckResult]) -> SuiteReport:
    passed = all(result.passed for result in checks if result.gated)
    logger.info(f"Suite {name.value}: {'pass' if passed else 'FAIL'} ({len(checks)} checks)")
    return SuiteReport(suite=name.value, passed=passed, checks=checks)


def hyperbolic_suite(max_n: Optional[int] = None, max_i: Optional[int] = None) -> SuiteReport:
    """
    Run the coth, functional-equation, convolution and even-order identities.

    Args:
        max_n: Largest even N of the coefficient windows
        max_i: Largest i of the functional equation

    Returns:
        SuiteReport: One entry per identity family plus one {i, N} row per coefficient
    """
    max_n = config.suites.max_n if max_n is None else max_n
    max_i = config.suites.max_i if max_i is None else max_i
    coth_max = config.suites.coth_max_i
    convolution_max = config.suites.convolution_max_l

    checks = [
        _aggregate("coth_identity", {"i_max": coth_max}, ((i,) for i in range(2, coth_max + 1)), coth_identity_check),
        _aggregate(
            "convolution_identity",
            {"l_max": convolution_max},
            ((l,) for l in range(1, convolution_max + 1)),
            convolution_identity_check,
        ),
        _aggregate("even_order", {"N_max": max_n}, ((N,) for N in range(4, max_n + 1, 2)), even_order_check),
    ]
    for i in range(max_i + 1):
        for row in functional_equation_rows(i, max_n):
            checks.append(_result("functional_equation", {"i": row.i, "N": row.N}, row.passed))
    return _suite(SuiteName.HYPERBOLIC, checks)


def _triangle(algebras: Sequence[StructureConstants], max_n: int) -> List[CheckResult]:
    """even_order_check, functional_equation_check and check_order_condition at each even N."""
    results = []
    for N in range(4, min(max_n, TRIANGLE_MAX_N) + 1, 2):
        links = {
            "even_order": even_order_check(N),
            "functional_equation": all(functional_equation_check(i, N) for i in range(N // 2)),
            "order_condition": all(check_order_condition(C, N) for C in algebras),
        }
        broken = [name for name, ok in links.items() if not ok]
        detail = f"broken: {', '.join(broken)}" if broken else None
        results.append(_result("consistency_triangle", {"N": N}, not broken, detail=detail))
    return results


def _triples(N: int) -> List[tuple]:
    return [(l, m, N - 1 - l - m) for l in range(N) for m in range(N - l)]


def _concrete(C: StructureConstants, max_n: int) -> List[CheckResult]:
    results = []
    for which in ConcreteCheck:
        gated = which != ConcreteCheck.SU2_EQUAL
        failing = [N for N in range(1, max_n + 1) if not concrete_tensor_check(C, N, which)]
        if gated:
            detail = f"failing N: {failing}" if failing else None
        else:
            detail = f"holds for N in {[N for N in range(1, max_n + 1) if N not in failing]}"
        results.append(
            _result(
                f"concrete_{which.value}",
                {"algebra": C.label, "N_max": max_n},
                not failing,
                gated=gated,
                detail=detail,
            )
        )
    return results


def chains_suite(
    max_n: Optional[int] = None,
    algebras: Optional[Sequence[StructureConstants]] = None,
    threads: Optional[int] = None,
    triangle_max_n: Optional[int] = None,
) -> SuiteReport:
    """
    Run the abstract chain calculus, the concrete tensors and the consistency triangle.

    Args:
        max_n: Largest chain order N of the abstract calculus
        algebras: Algebras of the concrete checks; defaults to the default catalog
        threads: Worker threads for the per-algebra fan-out
        triangle_max_n: Largest even N of the consistency triangle; defaults to the hyperbolic bound

    Returns:
        SuiteReport: The chain checks
    """
    max_n = config.suites.chain_max_n if max_n is None else max_n
    algebras = default_catalog() if algebras is None else list(algebras)
    jsi_max = config.suites.jsi_max
    max_s = config.suites.symmetry_max_s
    orders = range(1, max_n + 1)

    checks = []
    for N in orders:
        dimension = z_dimension(N)
        checks.append(_result("z_dimension", {"N": N}, dimension == math.ceil(N / 2), detail=f"rank {dimension}"))
    checks.append(
        _aggregate(
            "jsi",
            {"max": jsi_max},
            ((j, s, i) for j in range(1, jsi_max + 1) for s in range(1, jsi_max + 1) for i in range(1, jsi_max + 1)),
            jsi_check,
        )
    )
    checks.append(
        _aggregate(
            "symmetry_expansion",
            {"N_max": max_n, "s_max": max_s},
            (
                (j, s, N)
                for N in orders
                for s in range(1, min(max_s, N - 1) + 1)
                for j in range((N - s - 1) // 2 + 1)
            ),
            symmetry_expansion_check,
        )
    )
    checks.append(
        _aggregate(
            "central_relation",
            {"N_max": max_n},
            ((l, m, k) for N in range(1, max_n) for l, m, k in _triples(N)),
            central_relation_check,
        )
    )
    checks.append(_aggregate("symmetry_relations", {"N_max": max_n}, ((N,) for N in orders), symmetry_relations_check))
    checks.append(
        _aggregate(
            "special_symmetry_rank",
            {"N_max": max_n},
            ((N,) for N in orders),
            lambda N: special_symmetry_rank(N) == N // 2,
        )
    )
    checks.append(
        _aggregate(
            "k_sum_closed_form",
            {"N_max": max_n},
            ((I, N) for N in orders for I in range(N // 2 + 1)),
            lambda I, N: k_sum(I, N) == k_sum_closed(I, N).reduced(),
        )
    )
    checks.append(
        _aggregate(
            "order_condition_chain",
            {"N_max": max_n},
            ((N,) for N in orders),
            lambda N: order_condition_chain(N).is_zero(),
        )
    )
    checks.append(
        _aggregate(
            "chain_reduce_agreement",
            {"N_max": max_n},
            (triple for N in orders for triple in _triples(N)),
            lambda l, m, k: m_to_b(chain_reduce(l, m, k, ChainKind.M)) == chain_reduce(l, m, k, ChainKind.B),
        )
    )

    tensor_max = config.suites.tensor_max_n
    for results in parallel_map(lambda C: _concrete(C, tensor_max), algebras, threads):
        checks.extend(results)
    triangle_max_n = config.suites.max_n if triangle_max_n is None else triangle_max_n
    checks.extend(_triangle(algebras, triangle_max_n))
    return _suite(SuiteName.CHAINS, checks)


def _oracle(C: StructureConstants, degree: int) -> List[CheckResult]:
    parameters = {"algebra": C.label, "D": degree}
    samples = config.suites.random_pairs
    seed = config.suites.seed
    results = [
        _result("cross_oracle", parameters, cross_oracle_check(C, degree)),
        _result("derivation_closure", parameters, derivation_closure_check(C, degree)),
    ]
    for convention in Convention:
        tagged = {**parameters, "convention": convention.value}
        results.append(_result("dhxn", tagged, dhxn_check(C, degree, convention, samples, seed)))
        results.append(_result("sharp_polarization", tagged, sharp_polarization_check(C, degree, convention)))
        results.append(
            _result(
                "exp_tangent",
                {"algebra": C.label, "T": TANGENT_ORDER, "convention": convention.value},
                exp_tangent_check(C, TANGENT_ORDER, convention, samples, seed),
            )
        )
    return results


def oracle_suite(
    degree: Optional[int] = None,
    algebras: Optional[Sequence[StructureConstants]] = None,
    threads: Optional[int] = None,
) -> SuiteReport:
    """
    Run the enveloping-algebra oracle against the realization.

    Args:
        degree: Degree bound D of the sharp maps
        algebras: Algebras to check; defaults to the default catalog
        threads: Worker threads for the per-algebra fan-out

    Returns:
        SuiteReport: The oracle checks
    """
    degree = config.suites.oracle_degree if degree is None else degree
    algebras = default_catalog() if algebras is None else list(algebras)
    teq_max = config.suites.teq_max_n

    checks = [_aggregate("teq", {"n_max": teq_max}, ((n,) for n in range(teq_max + 1)), teq_check)]
    for results in parallel_map(lambda C: _oracle(C, degree), algebras, threads):
        checks.extend(results)
    return _suite(SuiteName.ORACLE, checks)


def _realization(C: StructureConstants, order: int, samples: int, seed: int) -> List[CheckResult]:
    main = check_commutators(C, Fraction(1), order)
    failing = [f"({pair.mu}, {pair.nu})" for pair in main.pairs if not pair.vanishes]
    results = [
        _result(
            "commutators",
            {"algebra": C.label, "lambda": "1", "T": order},
            main.passed,
            detail=f"nonzero residuals: {', '.join(failing)}" if failing else None,
        )
    ]
    family_order = min(order, LAMBDA_ORDER)
    for lam in LAMBDA_FAMILY:
        report = check_commutators(C, lam, family_order)
        results.append(
            _result(
                "commutators",
                {"algebra": C.label, "lambda": format_rational(lam), "T": family_order},
                report.passed,
                gated=report.mode == VerificationMode.GATED,
            )
        )
    results.append(
        _result(
            "lambda_reflection",
            {"algebra": C.label, "T": family_order},
            check_lambda_reflection(C, family_order),
        )
    )
    pde = check_pde(C, order)
    results.append(
        _result("pde", {"algebra": C.label, "T": order}, pde.passed, detail=", ".join(pde.witnesses[:10]) or None)
    )
    rng = random.Random(seed)
    covariance_order = min(order, COVARIANCE_ORDER)
    results.append(
        _result(
            "covariance",
            {"algebra": C.label, "T": covariance_order, "transforms": samples},
            all(check_covariance(C, BasisTransform.random(C.dim, rng), covariance_order) for _ in range(samples)),
        )
    )
    return results


def realization_suite(
    order: Optional[int] = None,
    algebras: Optional[Sequence[StructureConstants]] = None,
    threads: Optional[int] = None,
) -> SuiteReport:
    """
    Run the commutation relations and the realization identities over the catalog.

    Args:
        order: Truncation order T of the lambda = 1 relations and the PDE
        algebras: Algebras to check; defaults to the default catalog
        threads: Worker threads for the per-algebra fan-out

    Returns:
        SuiteReport: The realization checks; lambda != 1 entries on bases
        without total antisymmetry are recorded as data
    """
    order = config.engine.default_order if order is None else order
    algebras = default_catalog() if algebras is None else list(algebras)
    samples = config.suites.random_pairs
    seed = config.suites.seed

    checks = []
    for results in parallel_map(lambda C: _realization(C, order, samples, seed), algebras, threads):
        checks.extend(results)
    return _suite(SuiteName.REALIZATION, checks)


def run_suites(
    suite: SuiteName = SuiteName.ALL,
    max_n: Optional[int] = None,
    max_i: Optional[int] = None,
    threads: Optional[int] = None,
    order: Optional[int] = None,
) -> IdentitiesReport:
    """
    Run one suite or all of them.

    Args:
        suite: Which suite to run
        max_n: Overrides the N bound of the hyperbolic suite and the consistency triangle
        max_i: Overrides the i bound of the hyperbolic suite
        threads: Worker threads
        order: Overrides the truncation order of the realization suite

    Returns:
        IdentitiesReport: Suite reports in the order hyperbolic, chains, oracle, realization
    """
    suite = SuiteName(suite)
    start = time.monotonic()
    reports = []
    if suite in (SuiteName.HYPERBOLIC, SuiteName.ALL):
        reports.append(hyperbolic_suite(max_n, max_i))
    if suite in (SuiteName.CHAINS, SuiteName.ALL):
        reports.append(chains_suite(threads=threads, triangle_max_n=max_n))
    if suite in (SuiteName.ORACLE, SuiteName.ALL):
        reports.append(oracle_suite(threads=threads))
    if suite in (SuiteName.REALIZATION, SuiteName.ALL):
        reports.append(realization_suite(order, threads=threads))
    logger.info(f"Identity suites finished in {time.monotonic() - start:.2f}s")
    return IdentitiesReport(passed=all(report.passed for report in reports), suites=reports)
