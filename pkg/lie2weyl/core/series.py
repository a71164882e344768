"""
Truncated formal power series in one variable x.

A series of order T knows its coefficients of x^0..x^T exactly. Every operation
truncates eagerly to the order it can still guarantee, and reading beyond the
order is an error rather than a silent zero.
"""
from fractions import Fraction
from typing import Iterable, Tuple, Union

from lie2weyl.core.bernoulli import even_coefficient
from lie2weyl.utils.errors import PreconditionError, TruncationError

Scalar = Union[Fraction, int]


class PowerSeries:
    """Power series known through x^order."""

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Iterable[Scalar]):
        values = tuple(Fraction(c) for c in coefficients)
        if not values:
            raise PreconditionError("A power series needs at least its constant coefficient")
        self._coefficients: Tuple[Fraction, ...] = values

    @property
    def order(self) -> int:
        return len(self._coefficients) - 1

    @property
    def coefficients(self) -> Tuple[Fraction, ...]:
        return self._coefficients

    def coefficient(self, k: int) -> Fraction:
        if k < 0:
            return Fraction(0)
        if k > self.order:
            raise TruncationError(f"Coefficient of x^{k} is beyond the truncation order {self.order}")
        return self._coefficients[k]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise TruncationError(f"Cannot extend a series of order {self.order} to order {order}")
        return PowerSeries(self._coefficients[: order + 1])

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        return PowerSeries(self._coefficients[k] + other._coefficients[k] for k in range(order + 1))

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        order = min(self.order, other.order)
        return PowerSeries(self._coefficients[k] - other._coefficients[k] for k in range(order + 1))

    def __neg__(self) -> "PowerSeries":
        return PowerSeries(-c for c in self._coefficients)

    def __mul__(self, other: Union["PowerSeries", Scalar]) -> "PowerSeries":
        if isinstance(other, (int, Fraction)):
            return PowerSeries(c * other for c in self._coefficients)
        order = min(self.order, other.order)
        a, b = self._coefficients, other._coefficients
        return PowerSeries(
            sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(order + 1)
        )

    def __rmul__(self, other: Scalar) -> "PowerSeries":
        return self * other

    def derivative(self) -> "PowerSeries":
        if self.order == 0:
            raise TruncationError("The derivative of an order-0 series has no known coefficients")
        return PowerSeries(k * self._coefficients[k] for k in range(1, self.order + 1))

    def nth_derivative(self, n: int) -> "PowerSeries":
        result = self
        for _ in range(n):
            result = result.derivative()
        return result

    def shift(self) -> "PowerSeries":
        """Multiply by x; the order grows by one."""
        return PowerSeries((Fraction(0),) + self._coefficients)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        order = min(self.order, other.order)
        return self._coefficients[: order + 1] == other._coefficients[: order + 1]

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"PowerSeries({[str(c) for c in self._coefficients]})"


def f_series(order: int) -> PowerSeries:
    """
    (x/2)coth(x/2) through x^order.

    Args:
        order: Truncation order, at least 0

    Returns:
        PowerSeries: beta_{2J} at even powers x^{2J}, zero at odd powers
    """
    if order < 0:
        raise PreconditionError(f"Series order must be non-negative, got {order}")
    return PowerSeries(even_coefficient(k) if k % 2 == 0 else Fraction(0) for k in range(order + 1))
