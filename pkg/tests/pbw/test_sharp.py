"""
Unit tests for coderivation sharp maps and the oracle checks.
"""
from fractions import Fraction

import pytest

from lie2weyl.pbw import (
    Convention,
    coderivation_sharp,
    cross_oracle_check,
    derivation_closure_check,
    derivation_elements,
    dhxn_check,
    monomials,
    phi_from_oracle,
    sharp_polarization_check,
    teq_check,
)
from lie2weyl.realization import phi_series, swapped
from lie2weyl.utils.errors import PreconditionError
from lie2weyl.weyl import WeylElement, at_origin


class TestMonomials:
    """Tests for the monomial enumeration."""

    def test_order(self):
        """Test the graded order of the monomials."""
        assert monomials(2, 2) == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (2, 0)]

    def test_count(self):
        """Test the number of monomials."""
        assert len(monomials(3, 3)) == 20


class TestSharpMaps:
    """Tests for X^sharp(D_h(x^a))."""

    def test_heisenberg_value(self, heisenberg):
        """Test two values of the right-invariant table."""
        sharp = coderivation_sharp(heisenberg, 0, 1)
        assert sharp.value((0, 1, 0)) == (0, 0, Fraction(1, 2))
        assert sharp.value((0, 0, 0)) == (1, 0, 0)

    def test_heisenberg_left_invariant(self, heisenberg):
        """Test the sign flip of the left-invariant table."""
        sharp = coderivation_sharp(heisenberg, 0, 1, Convention.LEFT_INVARIANT)
        assert sharp.value((0, 1, 0)) == (0, 0, Fraction(-1, 2))

    def test_table_covers_monomials(self, so3):
        """Test that the table is keyed by every monomial."""
        sharp = coderivation_sharp(so3, 2, 2)
        assert sorted(sharp.table) == sorted(monomials(3, 2))
        assert sharp.convention == Convention.RIGHT_INVARIANT

    def test_negative_degree(self, so3):
        """Test that a negative degree is rejected."""
        with pytest.raises(PreconditionError):
            coderivation_sharp(so3, 0, -1)


class TestOracleIdentities:
    """Tests for the identities checked through U(g)."""

    @pytest.mark.parametrize("n", range(26))
    def test_teq(self, n):
        """Test the truncated exponential identity."""
        assert teq_check(n)

    def test_teq_negative(self):
        """Test that a negative degree is rejected."""
        with pytest.raises(PreconditionError):
            teq_check(-1)

    @pytest.mark.parametrize("convention", list(Convention))
    def test_dhxn(self, so3, convention):
        """Test the derivative identity on so3."""
        assert dhxn_check(so3, 2, convention, samples=1)

    @pytest.mark.parametrize("convention", list(Convention))
    def test_sharp_polarization(self, heisenberg, sl2, convention):
        """Test the polarization identity in both conventions."""
        assert sharp_polarization_check(heisenberg, 2, convention)
        assert sharp_polarization_check(sl2, 2, convention)

    def test_cross_oracle(self, catalog_algebras):
        """Test that the oracle and the tensor route agree through degree 6 on the catalog."""
        for C in catalog_algebras:
            assert cross_oracle_check(C, 6), C.label

    def test_phi_from_oracle_heisenberg(self, heisenberg):
        """Test that the oracle reproduces phi on the Heisenberg algebra."""
        phi = phi_from_oracle(heisenberg, 2)
        assert phi.entries == swapped(phi_series(heisenberg, 2)).entries
        assert phi.entry(2, 0).render() == "1/2 · x2 t"

    @pytest.mark.parametrize("name", ["so3", "sl2"])
    def test_derivation_closure(self, name, request):
        """Test that the derivations close under brackets."""
        assert derivation_closure_check(request.getfixturevalue(name), 3)

    def test_derivations_at_origin(self, so3):
        """Test that the derivations reduce to the partials at the origin."""
        fields = derivation_elements(so3, 2)
        assert [at_origin(field) for field in fields] == [WeylElement.partial(3, 2, j) for j in range(3)]
