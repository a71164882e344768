"""
Unit tests for the realization checks.
"""
import json
import random
from fractions import Fraction

import pytest

from lie2weyl.lie import BasisTransform, catalog
from lie2weyl.utils.errors import DimensionMismatchError, PreconditionError
from lie2weyl.verifier import (
    VerificationMode,
    check_commutators,
    check_covariance,
    check_lambda_reflection,
    check_order_condition,
    check_pde,
)


class TestCommutators:
    """Tests for [Phi_mu, Phi_nu] = C t Phi."""

    def test_catalog(self, catalog_algebras):
        """Test zero residuals for every catalog algebra at T = 6."""
        for C in catalog_algebras:
            report = check_commutators(C, Fraction(1), 6)
            assert report.passed, C.label
            assert report.mode == VerificationMode.GATED

    @pytest.mark.parametrize("name", ["so3", "heisenberg3", "abelian:3"])
    def test_order_eight(self, name):
        """Test zero residuals at T = 8 on the small algebras."""
        report = check_commutators(catalog(name), Fraction(1), 8)
        assert report.passed
        assert [(pair.mu, pair.nu) for pair in report.pairs] == [(1, 2), (1, 3), (2, 3)]
        assert all(pair.residual == "0" for pair in report.pairs)

    @pytest.mark.parametrize("lam", [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2)])
    def test_lambda_family_so3(self, so3, lam):
        """Test the lambda-family on a totally antisymmetric basis at T = 5."""
        report = check_commutators(so3, lam, 5)
        assert report.passed
        assert report.mode == VerificationMode.GATED

    def test_negative_lambda(self, so3):
        """Test that a negative lambda is accepted and gated."""
        report = check_commutators(so3, Fraction(-3, 4), 3)
        assert report.passed
        assert report.lambda_ == "-3/4"

    def test_report_mode(self, sl2):
        """Test that lambda != 1 on a basis without total antisymmetry is not gated."""
        report = check_commutators(sl2, Fraction(1, 2), 4)
        assert report.mode == VerificationMode.REPORT
        assert report.passed

    def test_threads(self, so3):
        """Test that the pooled run matches the single-threaded one."""
        single = check_commutators(so3, Fraction(1), 3, threads=1)
        pooled = check_commutators(so3, Fraction(1), 3, threads=4)
        assert single.pairs == pooled.pairs

    def test_json(self, heisenberg):
        """Test the keys and values of the JSON report."""
        document = json.loads(check_commutators(heisenberg, Fraction(1, 3), 2).to_json())
        assert set(document) == {"algebra", "lambda", "order", "pass", "pairs"}
        assert document["lambda"] == "1/3"
        assert document["pass"] is True
        assert document["pairs"][0] == {"mu": 1, "nu": 2, "residual": "0"}


class TestAuxiliaryIdentities:
    """Tests for the PDE, the order condition and the lambda reflection."""

    @pytest.mark.parametrize("name", ["so3", "heisenberg", "sl2"])
    def test_pde(self, name, request):
        """Test the defining PDE of phi through T = 4."""
        report = check_pde(request.getfixturevalue(name), 4)
        assert report.passed
        assert report.witnesses == []

    @pytest.mark.parametrize("N", [1, 2, 3, 4, 5])
    def test_order_condition(self, so3, sl2, N):
        """Test the order-N condition for the first orders."""
        assert check_order_condition(so3, N)
        assert check_order_condition(sl2, N)

    def test_order_condition_needs_positive_order(self, so3):
        """Test that N = 0 is rejected."""
        with pytest.raises(PreconditionError):
            check_order_condition(so3, 0)

    def test_lambda_reflection(self, catalog_algebras):
        """Test the reflection identity for every catalog algebra at T = 5."""
        for C in catalog_algebras:
            assert check_lambda_reflection(C, 5), C.label


class TestCovariance:
    """Tests for the change-of-basis covariance of phi."""

    def test_identity_transform(self, so3):
        """Test that the identity transform is trivially covariant."""
        assert check_covariance(so3, BasisTransform.identity(3), 3)

    @pytest.mark.parametrize("name", ["so3", "heisenberg3"])
    def test_random_transforms(self, name):
        """Test five random invertible transforms at T = 4."""
        rng = random.Random(7)
        C = catalog(name)
        for _ in range(5):
            assert check_covariance(C, BasisTransform.random(C.dim, rng), 4), C.label

    def test_catalog_transforms(self, catalog_algebras):
        """Test one random transform per catalog algebra at T = 3."""
        rng = random.Random(11)
        for C in catalog_algebras:
            assert check_covariance(C, BasisTransform.random(C.dim, rng), 3), C.label

    def test_dimension_mismatch(self, so3):
        """Test that a transform of the wrong size is rejected."""
        with pytest.raises(DimensionMismatchError):
            check_covariance(so3, BasisTransform.identity(2), 2)
