"""
Unit tests for truncated power series and univariate polynomials.
"""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lie2weyl.core.polynomial import Polynomial
from lie2weyl.core.series import PowerSeries, f_series
from lie2weyl.utils.errors import PreconditionError, TruncationError

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polynomials = st.lists(rationals, max_size=5).map(Polynomial)


class TestPowerSeries:
    """Tests for PowerSeries."""

    def test_f_series(self):
        """Test (x/2)coth(x/2) = 1 + x^2/12 - x^4/720 + x^6/30240 - ..."""
        f = f_series(6)
        assert f.coefficients == (1, 0, Fraction(1, 12), 0, Fraction(-1, 720), 0, Fraction(1, 30240))

    def test_reading_beyond_order(self):
        """Test that coefficients beyond the order raise instead of reading zero."""
        f = f_series(4)
        assert f.coefficient(-1) == 0
        with pytest.raises(TruncationError):
            f.coefficient(5)

    def test_product_truncates_to_common_order(self):
        """Test that a product keeps the smaller truncation order."""
        a = PowerSeries([1, 1, 1])
        b = PowerSeries([1, -1])
        product = a * b
        assert product.order == 1
        assert product.coefficients == (1, 0)

    def test_derivative_and_shift(self):
        """Test that x f' has the coefficients k f_k."""
        f = f_series(6)
        xf = f.derivative().shift()
        assert xf.order == 6
        assert [xf.coefficient(k) for k in range(7)] == [k * f.coefficient(k) for k in range(7)]

    def test_order_zero_derivative(self):
        """Test that differentiating an order-0 series is a truncation error."""
        with pytest.raises(TruncationError):
            PowerSeries([3]).derivative()

    def test_cannot_extend(self):
        """Test that the truncation order cannot be raised."""
        with pytest.raises(TruncationError):
            PowerSeries([1, 2]).truncate(3)

    def test_invalid(self):
        """Test that an empty series and a negative order are rejected."""
        with pytest.raises(PreconditionError):
            PowerSeries([])
        with pytest.raises(PreconditionError):
            f_series(-1)

    def test_functional_equation_low_order(self):
        """Test f^2 + x f' - f = x^2/4 through x^4."""
        f = f_series(5)
        expression = f * f + f.derivative().shift() - f
        assert [expression.coefficient(k) for k in range(5)] == [0, 0, Fraction(1, 4), 0, 0]


class TestPolynomial:
    """Tests for Polynomial."""

    def test_canonical(self):
        """Test that trailing zeros are dropped."""
        assert Polynomial([1, 2, 0, 0]).coefficients == (1, 2)
        assert Polynomial([0, 0]).is_zero()
        assert Polynomial().degree == -1

    def test_arithmetic(self):
        """Test sums and products of small polynomials."""
        x = Polynomial.variable()
        one = Polynomial.constant(1)
        assert (x + one) ** 2 == Polynomial([1, 2, 1])
        assert (x + one) * (x - one) == Polynomial([-1, 0, 1])
        assert (x**3).derivative() == Polynomial([0, 0, 3])

    @given(polynomials, polynomials)
    def test_commutative(self, p, q):
        """Test that polynomial multiplication commutes."""
        assert p * q == q * p

    @given(polynomials, polynomials)
    def test_leibniz(self, p, q):
        """Test (pq)' = p'q + pq'."""
        assert (p * q).derivative() == p.derivative() * q + p * q.derivative()

    @given(polynomials, polynomials, polynomials)
    def test_distributive(self, p, q, r):
        """Test that multiplication distributes over addition."""
        assert p * (q + r) == p * q + p * r
