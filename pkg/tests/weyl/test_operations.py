"""
Unit tests for commutators, involutions and derivations on Weyl elements.
"""
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from lie2weyl.utils.errors import DimensionMismatchError, PreconditionError
from lie2weyl.weyl import (
    WeylElement,
    at_origin,
    commutator,
    dagger,
    delta_derivative,
    normal_mul,
    substitute_partials,
    swap_automorphism,
)

DIM = 2
ORDER = 3

exponents = st.tuples(st.integers(0, 2), st.integers(0, 2))
coefficients = st.fractions(min_value=-3, max_value=3, max_denominator=4)
elements = st.dictionaries(
    st.tuples(exponents, exponents, st.integers(0, ORDER)), coefficients, max_size=3
).map(lambda terms: WeylElement(DIM, ORDER, terms))
partial_only = st.dictionaries(
    st.tuples(st.just((0, 0)), exponents, st.integers(0, ORDER)), coefficients, max_size=4
).map(lambda terms: WeylElement(DIM, ORDER, terms))


def x(i: int) -> WeylElement:
    return WeylElement.x(DIM, ORDER, i)


def d(i: int) -> WeylElement:
    return WeylElement.partial(DIM, ORDER, i)


class TestCommutator:
    """Tests for the commutator."""

    @given(elements, elements, elements)
    def test_leibniz(self, u, v, w):
        """Test [u, vw] = [u, v] w + v [u, w]."""
        left = commutator(u, normal_mul(v, w))
        right = normal_mul(commutator(u, v), w) + normal_mul(v, commutator(u, w))
        assert left == right

    @given(elements, elements, elements)
    def test_jacobi(self, u, v, w):
        """Test the Jacobi identity for commutators."""
        total = commutator(u, commutator(v, w)) + commutator(v, commutator(w, u)) + commutator(w, commutator(u, v))
        assert total.is_zero()


class TestInvolutions:
    """Tests for dagger and the swap automorphism."""

    def test_dagger_generators(self):
        """Test dagger on x and d."""
        assert dagger(x(0)) == x(0)
        assert dagger(d(1)) == -d(1)

    def test_dagger_reverses(self):
        """Test (x d)^dagger = -d x = -x d - 1."""
        expected = -(x(0) * d(0)) - WeylElement.one(DIM, ORDER)
        assert dagger(x(0) * d(0)) == expected

    @given(elements, elements)
    def test_dagger_antimultiplicative(self, u, v):
        """Test that dagger reverses products."""
        assert dagger(normal_mul(u, v)) == normal_mul(dagger(v), dagger(u))

    @given(elements)
    def test_dagger_involution(self, u):
        """Test that dagger is an involution."""
        assert dagger(dagger(u)) == u

    def test_swap_generators(self):
        """Test the swap on x and d."""
        assert swap_automorphism(x(0)) == -d(0)
        assert swap_automorphism(d(1)) == x(1)

    @given(elements, elements)
    def test_swap_multiplicative(self, u, v):
        """Test that the swap preserves products."""
        assert swap_automorphism(normal_mul(u, v)) == normal_mul(swap_automorphism(u), swap_automorphism(v))

    @given(elements)
    def test_swap_order_four(self, u):
        """Test that applying the swap four times is the identity."""
        image = u
        for _ in range(4):
            image = swap_automorphism(image)
        assert image == u

    @given(elements)
    def test_swap_squares_to_sign_flip(self, u):
        """Test that swap o swap is x -> -x, d -> -d."""
        flipped = WeylElement(
            DIM, ORDER, {(a, b, e): (-1) ** (sum(a) + sum(b)) * c for (a, b, e), c in u.terms.items()}
        )
        assert swap_automorphism(swap_automorphism(u)) == flipped


class TestDerivations:
    """Tests for the operations on x-free elements."""

    def test_delta_derivative(self):
        """Test both derivatives of an x-free monomial."""
        u = WeylElement(DIM, ORDER, {((0, 0), (2, 1), 1): 3})
        assert delta_derivative(u, 0) == WeylElement(DIM, ORDER, {((0, 0), (1, 1), 1): 6})
        assert delta_derivative(u, 1) == WeylElement(DIM, ORDER, {((0, 0), (2, 0), 1): 3})

    def test_delta_derivative_rejects_x(self):
        """Test that x factors and out-of-range indices are rejected."""
        with pytest.raises(PreconditionError):
            delta_derivative(x(0), 0)
        with pytest.raises(PreconditionError):
            delta_derivative(d(0), 2)

    @given(partial_only, partial_only)
    def test_delta_leibniz(self, u, v):
        """Test the Leibniz rule of the delta derivative."""
        left = delta_derivative(normal_mul(u, v), 0)
        right = normal_mul(delta_derivative(u, 0), v) + normal_mul(u, delta_derivative(v, 0))
        assert left == right

    def test_substitute_partials(self):
        """Test d1 d2 -> (d1 + d2)(2 d2)."""
        matrix = [[Fraction(1), Fraction(1)], [Fraction(0), Fraction(2)]]
        result = substitute_partials(d(0) * d(1), matrix)
        assert result == (d(0) + d(1)) * d(1).scale(2)

    def test_substitute_partials_checks(self):
        """Test the size and x-free checks of the substitution."""
        with pytest.raises(DimensionMismatchError):
            substitute_partials(d(0), [[1]])
        with pytest.raises(PreconditionError):
            substitute_partials(x(0), [[1, 0], [0, 1]])

    def test_at_origin(self):
        """Test that evaluation at the origin keeps the x-free part."""
        u = x(0) * d(1) + d(0).shift(1) + WeylElement.one(DIM, ORDER)
        assert at_origin(u) == d(0).shift(1) + WeylElement.one(DIM, ORDER)
