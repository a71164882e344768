"""
Unit tests for the coexponential map and its inverse.
"""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lie2weyl.lie import catalog
from lie2weyl.pbw import PBWAlgebra, coexp, coexp_inverse, coexp_of, monomials
from lie2weyl.utils.errors import PreconditionError
from lie2weyl.weyl import WeylElement

ALGEBRAS = {name: PBWAlgebra(catalog(name), 3) for name in ("so3", "heisenberg3", "sl2", "ut3")}

# (exponent, t-degree) pairs whose symmetrized images stay within t^3
KEYS = [(alpha, d) for d in (0, 1) for alpha in monomials(3, 3 - d)]

combinations = st.dictionaries(
    st.sampled_from(KEYS), st.fractions(min_value=-3, max_value=3, max_denominator=5), min_size=1, max_size=4
).map(lambda terms: WeylElement(3, 3, {(alpha, (0, 0, 0), d): value for (alpha, d), value in terms.items()}))


class TestCoexp:
    """Tests for the symmetrization map."""

    def test_degree_zero_and_one(self, so3):
        """Test that coexp fixes the unit and the generators."""
        algebra = PBWAlgebra(so3, 2)
        assert coexp(algebra, (0, 0, 0)) == algebra.one()
        assert coexp(algebra, (0, 1, 0)) == algebra.generator(1)

    def test_heisenberg_product(self, heisenberg):
        """Test the symmetrized product on the Heisenberg algebra."""
        algebra = PBWAlgebra(heisenberg, 2)
        assert coexp(algebra, (1, 1, 0)).render() == "1 · z1 z2 + -1/2 · z3 t"

    def test_symmetrization(self, so3):
        """Test coexp against the symmetrized product on so3."""
        algebra = PBWAlgebra(so3, 3)
        z1, z2 = algebra.generator(0), algebra.generator(1)
        assert coexp(algebra, (1, 1, 0)) == (z1 * z2 + z2 * z1).scale(Fraction(1, 2))

    def test_powers_are_fixed(self, sl2):
        """Test that pure powers are their own symmetrization."""
        algebra = PBWAlgebra(sl2, 3)
        assert coexp(algebra, (0, 3, 0)) == algebra.monomial((0, 3, 0))

    def test_invalid_exponent(self, so3):
        """Test that an exponent of the wrong length is rejected."""
        with pytest.raises(PreconditionError):
            coexp(PBWAlgebra(so3, 1), (1, 0))


class TestCoexpInverse:
    """Tests for elimination from the top degree."""

    @pytest.mark.parametrize("name", ["so3", "heisenberg", "sl2"])
    def test_inverse_on_monomials(self, name, request):
        """Test the inverse on every monomial of degree at most 3."""
        algebra = PBWAlgebra(request.getfixturevalue(name), 3)
        for alpha in monomials(3, 3):
            expected = WeylElement.monomial(3, 3, a=alpha)
            assert coexp_inverse(coexp(algebra, alpha), 3) == expected

    def test_inverse_of_linear_combination(self, so3):
        """Test the inverse on a mixed combination."""
        algebra = PBWAlgebra(so3, 3)
        s = WeylElement(3, 3, {((1, 1, 0), (0, 0, 0), 0): 2, ((0, 0, 1), (0, 0, 0), 1): Fraction(-1, 3)})
        assert coexp_inverse(coexp_of(algebra, s), 2) == s

    @given(st.sampled_from(sorted(ALGEBRAS)), combinations)
    def test_inverse_property(self, name, s):
        """Test that coexp_inverse undoes coexp on random combinations."""
        assert coexp_inverse(coexp_of(ALGEBRAS[name], s), 3) == s

    def test_heisenberg_ordered_product(self, heisenberg):
        """z1 z2 = xi(x1 x2) + 1/2 xi(x3) t"""
        algebra = PBWAlgebra(heisenberg, 2)
        preimage = coexp_inverse(algebra.generator(0) * algebra.generator(1), 2)
        assert preimage.render() == "1 · x1 x2 + 1/2 · x3 t"

    def test_degree_bound(self, so3):
        """Test that the inverse rejects terms above its degree bound."""
        algebra = PBWAlgebra(so3, 2)
        with pytest.raises(PreconditionError):
            coexp_inverse(coexp(algebra, (2, 0, 0)), 1)
