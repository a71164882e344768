"""
Unit tests for Bernoulli numbers and their normalized families.
"""
from fractions import Fraction

import pytest

from lie2weyl.core.bernoulli import (
    BernoulliTable,
    bernoulli,
    convolution_identity_check,
    even_coefficient,
    expansion_coefficient,
)
from lie2weyl.utils.errors import PreconditionError


class TestBernoulli:
    """Tests for the Bernoulli table."""

    @pytest.mark.parametrize(
        "n, expected",
        [
            (0, Fraction(1)),
            (1, Fraction(-1, 2)),
            (2, Fraction(1, 6)),
            (3, Fraction(0)),
            (4, Fraction(-1, 30)),
            (6, Fraction(1, 42)),
            (12, Fraction(-691, 2730)),
        ],
    )
    def test_values(self, n, expected):
        """Test the first Bernoulli numbers under B_1 = -1/2."""
        assert bernoulli(n) == expected

    def test_odd_vanish(self):
        """Test that B_n = 0 for odd n > 1."""
        assert all(bernoulli(n) == 0 for n in range(3, 40, 2))

    def test_table_grows_monotonically(self):
        """Test that a fresh table extends on demand and keeps earlier values."""
        table = BernoulliTable()
        assert table.size == 1
        values = table.values(10)
        assert len(values) == 11
        assert table.size == 11
        assert table.get(2) == Fraction(1, 6)

    def test_negative_index(self):
        """Test that a negative index is rejected."""
        with pytest.raises(PreconditionError):
            bernoulli(-1)


class TestCoefficientFamilies:
    """Tests for A_n and beta_n."""

    def test_expansion_coefficients(self):
        """Test A_n = (-1)^n B_n / n!."""
        assert expansion_coefficient(0) == 1
        assert expansion_coefficient(1) == Fraction(1, 2)
        assert expansion_coefficient(2) == Fraction(1, 12)
        assert expansion_coefficient(3) == 0
        assert expansion_coefficient(4) == Fraction(-1, 720)

    def test_even_coefficients(self):
        """Test beta_n = B_n / n!, the Taylor coefficients of (x/2)coth(x/2)."""
        assert even_coefficient(0) == 1
        assert even_coefficient(2) == Fraction(1, 12)
        assert even_coefficient(4) == Fraction(-1, 720)
        assert even_coefficient(6) == Fraction(1, 30240)


class TestConvolutionIdentity:
    """Tests for the Bernoulli convolution identity."""

    @pytest.mark.parametrize("l", range(1, 21))
    def test_holds(self, l):
        """Test the Bernoulli convolution identity for small l."""
        assert convolution_identity_check(l)

    def test_rejects_zero(self):
        """Test that l = 0 is rejected."""
        with pytest.raises(PreconditionError):
            convolution_identity_check(0)
