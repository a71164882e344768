"""
Unit tests for the tangent of the exponential map.
"""
from fractions import Fraction

import pytest

from lie2weyl.pbw import Convention, EpsilonPair, PBWAlgebra, exp_series, exp_tangent_check, tangent_vector
from lie2weyl.utils.errors import PreconditionError


class TestEpsilonPair:
    """Tests for dual numbers over U(g_t)."""

    def test_eps_squares_to_zero(self, so3):
        """Test that eps squares to zero."""
        algebra = PBWAlgebra(so3, 2)
        eps = EpsilonPair(algebra.zero(), algebra.one())
        assert eps * eps == EpsilonPair(algebra.zero(), algebra.zero())

    def test_exp_of_zero(self, so3):
        """Test that exp(0) = 1."""
        algebra = PBWAlgebra(so3, 2)
        zero = EpsilonPair(algebra.zero(), algebra.zero())
        assert exp_series(zero, 4) == EpsilonPair(algebra.one(), algebra.zero())

    def test_exp_of_eps(self, so3):
        """Test that exp(eps y) = 1 + eps y."""
        algebra = PBWAlgebra(so3, 2)
        y = algebra.generator(1)
        assert exp_series(EpsilonPair(algebra.zero(), y), 3) == EpsilonPair(algebra.one(), y)


class TestTangent:
    """Tests for Z, Z' and the tangent identity."""

    def test_abelian_tangent_is_y(self, abelian3):
        """Test that the tangent vector is y on an abelian algebra."""
        Z = tangent_vector(abelian3, [1, 2, 3], [Fraction(1, 2), 0, 1], 4)
        assert Z == PBWAlgebra(abelian3, 4).linear([Fraction(1, 2), 0, 1])

    def test_first_correction(self, heisenberg):
        """Z' = Y + (1/2)[X, Y] t^2 for a two-step nilpotent algebra."""
        Z = tangent_vector(heisenberg, [1, 0, 0], [0, 1, 0], 4)
        algebra = PBWAlgebra(heisenberg, 4)
        assert Z == algebra.generator(1) + algebra.linear([0, 0, Fraction(1, 2)], d=2)

    @pytest.mark.parametrize("convention", list(Convention))
    def test_identity(self, catalog_algebras, convention):
        """Test the tangent identity on every catalog algebra at T = 5 with three random pairs."""
        for C in catalog_algebras:
            assert exp_tangent_check(C, 5, convention, samples=3), C.label

    def test_negative_order(self, so3):
        """Test that a negative order is rejected."""
        with pytest.raises(PreconditionError):
            exp_tangent_check(so3, -1)
