"""
Lie algebra models for the lie2weyl engine.

This module defines the structure-constant tensor, basis transforms and the
validation report.
"""
import random
from fractions import Fraction
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple

import sympy
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, field_validator, model_validator

from lie2weyl.utils.errors import PreconditionError

BracketKey = Tuple[int, int, int]


def _to_fraction(value: Any) -> Fraction:
    rational = sympy.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


class StructureConstants(BaseModel):
    """
    Structure constants C^k_{ij} of [X_i, X_j] = sum_k C^k_{ij} X_k.

    Entries are keyed by 0-based (i, j, k) with i < j; C^k_{ji} = -C^k_{ij} and
    C^k_{ii} = 0 are implied.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    dim: int = Field(..., gt=0, description="Dimension n of the algebra")
    name: Optional[str] = Field(None, description="Optional label")
    entries: Dict[BracketKey, Fraction] = Field(
        default_factory=dict, description="Nonzero C^k_{ij} for i < j, 0-based"
    )

    _brackets: Dict[Tuple[int, int], Dict[int, Fraction]] = PrivateAttr(default_factory=dict)

    @field_validator("entries", mode="before")
    @classmethod
    def _coerce_entries(cls, value: Any) -> Dict[BracketKey, Fraction]:
        return {tuple(key): Fraction(coefficient) for key, coefficient in dict(value).items() if coefficient != 0}

    @model_validator(mode="after")
    def _check_indices(self) -> "StructureConstants":
        for i, j, k in self.entries:
            if not (0 <= i < j < self.dim and 0 <= k < self.dim):
                raise ValueError(f"Bracket index ({i}, {j}, {k}) is not an i < j triple below dim {self.dim}")
        return self

    def model_post_init(self, __context: Any) -> None:
        brackets: Dict[Tuple[int, int], Dict[int, Fraction]] = {}
        for (i, j, k), coefficient in sorted(self.entries.items()):
            brackets.setdefault((i, j), {})[k] = coefficient
            brackets.setdefault((j, i), {})[k] = -coefficient
        self._brackets = brackets

    @property
    def label(self) -> str:
        return self.name or f"algebra{self.dim}"

    def coefficient(self, i: int, j: int, k: int) -> Fraction:
        """C^k_{ij} with antisymmetric closure."""
        return self._brackets.get((i, j), {}).get(k, Fraction(0))

    def bracket(self, i: int, j: int) -> Dict[int, Fraction]:
        """The nonzero coefficients of [X_i, X_j]."""
        return self._brackets.get((i, j), {})

    def nonzero(self) -> Iterator[Tuple[int, int, int, Fraction]]:
        """All nonzero C^k_{ij} over ordered pairs, in canonical order."""
        for (i, j) in sorted(self._brackets):
            for k, coefficient in sorted(self._brackets[(i, j)].items()):
                yield i, j, k, coefficient

    def is_abelian(self) -> bool:
        return not self.entries

    def ad(self, vector: Sequence[Fraction], target: Sequence[Fraction]) -> List[Fraction]:
        """[x, y] for coordinate vectors x and y."""
        result = [Fraction(0)] * self.dim
        for i, j, k, coefficient in self.nonzero():
            if vector[i] and target[j]:
                result[k] += coefficient * vector[i] * target[j]
        return result


class BasisTransform(BaseModel):
    """
    Invertible change of basis X'_i = sum_a O^a_i X_a.

    `matrix[a][i]` holds O^a_i; `inverse` is its exact inverse.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    dim: int = Field(..., gt=0, description="Dimension n")
    matrix: Tuple[Tuple[Fraction, ...], ...] = Field(..., description="O^a_i, row a, column i")
    inverse: Tuple[Tuple[Fraction, ...], ...] = Field(..., description="Exact inverse of matrix")

    @model_validator(mode="after")
    def _check_inverse(self) -> "BasisTransform":
        n = self.dim
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise ValueError("matrix must be n x n")
        if len(self.inverse) != n or any(len(row) != n for row in self.inverse):
            raise ValueError("inverse must be n x n")
        for r in range(n):
            for c in range(n):
                value = sum((self.matrix[r][s] * self.inverse[s][c] for s in range(n)), Fraction(0))
                if value != (1 if r == c else 0):
                    raise ValueError("matrix * inverse is not the identity")
        return self

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]]) -> "BasisTransform":
        """Build a transform from its matrix rows, inverting exactly."""
        n = len(rows)
        if n == 0 or any(len(row) != n for row in rows):
            raise PreconditionError("A basis transform needs a square, non-empty matrix")
        matrix = tuple(tuple(Fraction(value) for value in row) for row in rows)
        symbolic = sympy.Matrix([[sympy.Rational(v.numerator, v.denominator) for v in row] for row in matrix])
        if symbolic.det() == 0:
            raise PreconditionError("Basis transform matrix is singular")
        inverse_matrix = symbolic.inv()
        inverse = tuple(tuple(_to_fraction(inverse_matrix[r, c]) for c in range(n)) for r in range(n))
        return cls(dim=n, matrix=matrix, inverse=inverse)

    @classmethod
    def identity(cls, n: int) -> "BasisTransform":
        rows = tuple(tuple(Fraction(int(r == c)) for c in range(n)) for r in range(n))
        return cls(dim=n, matrix=rows, inverse=rows)

    @classmethod
    def random(cls, n: int, rng: random.Random, bound: int = 3) -> "BasisTransform":
        """A random invertible transform with small rational entries."""
        while True:
            rows = [
                [Fraction(rng.randint(-bound, bound), rng.randint(1, 2)) for _ in range(n)]
                for _ in range(n)
            ]
            try:
                return cls.from_rows(rows)
            except PreconditionError:
                continue

    def inverted(self) -> "BasisTransform":
        return BasisTransform(dim=self.dim, matrix=self.inverse, inverse=self.matrix)


class ValidationReport(BaseModel):
    """Outcome of validating a structure-constant table."""

    algebra: str = Field(..., description="Label of the validated algebra")
    antisymmetric: bool = Field(..., description="C^k_{ij} = -C^k_{ji} and C^k_{ii} = 0")
    jacobi: bool = Field(..., description="Jacobi identity over all (i, j, k, beta)")
    totally_antisymmetric: bool = Field(..., description="Antisymmetric under every transposition of (i, j, k)")
    witnesses: Dict[str, List[int]] = Field(
        default_factory=dict, description="First failing 1-based index tuple per failed property"
    )

    @property
    def valid(self) -> bool:
        return self.antisymmetric and self.jacobi
