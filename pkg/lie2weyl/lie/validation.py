"""
Validation of structure-constant tables.

Validation never raises: a failed property yields False plus the first
1-based index tuple where it fails.
"""
from fractions import Fraction
from itertools import product
from typing import Mapping, Optional, Tuple

from loguru import logger

from lie2weyl.lie.models import StructureConstants, ValidationReport


# 0-based (i, j, k) -> C^k_{ij} as given, before antisymmetric closure
RawTable = Mapping[Tuple[int, int, int], Fraction]


def _antisymmetry_witness(raw: RawTable):
    for (i, j, k), value in sorted(raw.items()):
        if i == j and value != 0:
            return [i + 1, j + 1, k + 1]
        mirrored = raw.get((j, i, k))
        if i < j and mirrored is not None and mirrored != -value:
            return [i + 1, j + 1, k + 1]
    return None


def _jacobi_witness(C: StructureConstants):
    n = C.dim
    for i, j, k, beta in product(range(n), repeat=4):
        total = Fraction(0)
        for first, second, third in ((i, j, k), (j, k, i), (k, i, j)):
            for alpha, coefficient in C.bracket(first, second).items():
                total += coefficient * C.coefficient(alpha, third, beta)
        if total != 0:
            return [i + 1, j + 1, k + 1, beta + 1]
    return None


def _total_antisymmetry_witness(C: StructureConstants):
    n = C.dim
    for i, j, k in product(range(n), repeat=3):
        value = C.coefficient(i, j, k)
        # transpositions (i k) and (j k); (i j) is built into the table
        if C.coefficient(k, j, i) != -value or C.coefficient(i, k, j) != -value:
            return [i + 1, j + 1, k + 1]
    return None


def validate(C: StructureConstants, raw: Optional[RawTable] = None) -> ValidationReport:
    """
    Check antisymmetry, the Jacobi identity and total antisymmetry.

    A StructureConstants table is antisymmetric by construction, so antisymmetry
    is checked on the raw input table when one is given.

    Args:
        C: Structure constants to check
        raw: Entries as given, keyed by 0-based (i, j, k) in either order

    Returns:
        ValidationReport: Flags and 1-based witnesses of the failed properties
    """
    witnesses = {}
    antisymmetry = _antisymmetry_witness(raw) if raw is not None else None
    if antisymmetry is not None:
        witnesses["antisymmetric"] = antisymmetry
    jacobi = _jacobi_witness(C)
    if jacobi is not None:
        witnesses["jacobi"] = jacobi
    total = _total_antisymmetry_witness(C)
    if total is not None:
        witnesses["totally_antisymmetric"] = total

    report = ValidationReport(
        algebra=C.label,
        antisymmetric=antisymmetry is None,
        jacobi=jacobi is None,
        totally_antisymmetric=total is None,
        witnesses=witnesses,
    )
    if not report.valid:
        logger.warning(f"Algebra {C.label} failed validation: {witnesses}")
    return report
