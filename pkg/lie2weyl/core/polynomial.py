"""
Exact univariate polynomials over the rationals.
"""
from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

Scalar = Union[Fraction, int]


class Polynomial:
    """
    Polynomial in one commuting symbol with Fraction coefficients.

    Coefficients are stored lowest degree first with no trailing zeros; the zero
    polynomial has an empty coefficient tuple.
    """

    __slots__ = ("_coefficients",)

    symbol = "T"

    def __init__(self, coefficients: Iterable[Scalar] = ()):
        values = [Fraction(c) for c in coefficients]
        while values and values[-1] == 0:
            values.pop()
        self._coefficients: Tuple[Fraction, ...] = tuple(values)

    @classmethod
    def constant(cls, value: Scalar) -> "Polynomial":
        return cls([value])

    @classmethod
    def variable(cls) -> "Polynomial":
        return cls([0, 1])

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coefficients

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coefficients) - 1

    def is_zero(self) -> bool:
        return not self._coefficients

    def coefficient(self, k: int) -> Fraction:
        if 0 <= k < len(self._coefficients):
            return self._coefficients[k]
        return Fraction(0)

    def _new(self, coefficients: Sequence[Scalar]) -> "Polynomial":
        return type(self)(coefficients)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self._coefficients), len(other._coefficients))
        return self._new([self.coefficient(k) + other.coefficient(k) for k in range(size)])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        size = max(len(self._coefficients), len(other._coefficients))
        return self._new([self.coefficient(k) - other.coefficient(k) for k in range(size)])

    def __neg__(self) -> "Polynomial":
        return self._new([-c for c in self._coefficients])

    def __mul__(self, other: Union["Polynomial", Scalar]) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self._new([c * other for c in self._coefficients])
        if self.is_zero() or other.is_zero():
            return self._new([])
        product = [Fraction(0)] * (len(self._coefficients) + len(other._coefficients) - 1)
        for i, a in enumerate(self._coefficients):
            if a == 0:
                continue
            for j, b in enumerate(other._coefficients):
                product[i + j] += a * b
        return self._new(product)

    def __rmul__(self, other: Scalar) -> "Polynomial":
        return self * other

    def __pow__(self, exponent: int) -> "Polynomial":
        result = self._new([1])
        for _ in range(exponent):
            result = result * self
        return result

    def derivative(self) -> "Polynomial":
        return self._new([k * c for k, c in enumerate(self._coefficients)][1:])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coefficients == other._coefficients

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in enumerate(self._coefficients):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append(f"{c}*{self.symbol}")
            else:
                parts.append(f"{c}*{self.symbol}^{k}")
        return " + ".join(parts)
