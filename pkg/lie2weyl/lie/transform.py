"""
Change of basis for structure constants.
"""
from fractions import Fraction
from typing import Dict, Tuple

from loguru import logger

from lie2weyl.lie.models import BasisTransform, StructureConstants
from lie2weyl.utils.errors import DimensionMismatchError


def transform(C: StructureConstants, O: BasisTransform) -> StructureConstants:
    """
    Structure constants in the frame X'_i = sum_a O^a_i X_a.

    C'^s_{ij} = O^a_i O^b_j C^g_{ab} (O^-1)^s_g

    Args:
        C: Structure constants in the original frame
        O: Invertible basis transform of the same dimension

    Returns:
        StructureConstants: The transformed table, keeping C's name
    """
    if C.dim != O.dim:
        raise DimensionMismatchError(f"Algebra has dimension {C.dim} but the transform has dimension {O.dim}")
    n = C.dim
    nonzero = list(C.nonzero())
    entries: Dict[Tuple[int, int, int], Fraction] = {}
    for i in range(n):
        for j in range(i + 1, n):
            # [X'_i, X'_j] in the old basis
            image = [Fraction(0)] * n
            for a, b, g, coefficient in nonzero:
                weight = O.matrix[a][i] * O.matrix[b][j]
                if weight:
                    image[g] += weight * coefficient
            for s in range(n):
                value = sum((O.inverse[s][g] * image[g] for g in range(n) if image[g]), Fraction(0))
                if value:
                    entries[(i, j, s)] = value
    logger.debug(f"Transformed {C.label}: {len(C.entries)} -> {len(entries)} entries")
    return StructureConstants(dim=n, name=C.name, entries=entries)
