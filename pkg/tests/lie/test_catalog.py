"""
Unit tests for the built-in algebra catalog.
"""
from fractions import Fraction

import pytest

from lie2weyl.lie import DEFAULT_CATALOG, catalog, catalog_names, default_catalog, validate
from lie2weyl.utils.errors import UsageError


class TestCatalog:
    """Tests for catalog lookups."""

    def test_names(self):
        """Test the listed catalog names."""
        names = catalog_names()
        for name in ["abelian:n", "heisenberg3", "so3", "sl2", "ut3", "e2", "sl2_plus_abelian:m"]:
            assert name in names

    def test_default_catalog_is_valid(self):
        """Test that every default algebra satisfies the Jacobi identity."""
        algebras = default_catalog()
        assert [C.label for C in algebras] == DEFAULT_CATALOG
        for C in algebras:
            assert validate(C).valid, C.label

    def test_sl2(self):
        """Test [H, E] = 2E, [H, F] = -2F, [E, F] = H."""
        C = catalog("sl2")
        assert C.bracket(0, 1) == {1: Fraction(2)}
        assert C.bracket(0, 2) == {2: Fraction(-2)}
        assert C.bracket(1, 2) == {0: Fraction(1)}

    def test_parameterized(self):
        """Test the parameterized families."""
        assert catalog("abelian:4").dim == 4
        assert catalog("abelian:4").is_abelian()
        C = catalog("sl2_plus_abelian:2")
        assert C.dim == 5
        assert C.bracket(3, 4) == {}
        assert C.bracket(1, 2) == {0: Fraction(1)}

    @pytest.mark.parametrize("name", ["su3", "abelian:x", "abelian:0", "sl2_plus_abelian:-1"])
    def test_unknown(self, name):
        """Test that unknown names are usage errors."""
        with pytest.raises(UsageError):
            catalog(name)

    def test_only_so3_is_totally_antisymmetric(self, catalog_algebras):
        """Test that so3 is the only totally antisymmetric catalog algebra."""
        flags = {C.label: validate(C).totally_antisymmetric for C in catalog_algebras}
        assert flags["so3"]
        assert flags["abelian:3"]
        assert not flags["heisenberg3"]
        assert not flags["sl2"]
