"""
Tests for the identity suites and their reports.
"""
import json

from lie2weyl.suites import (
    CheckResult,
    IdentitiesReport,
    SuiteName,
    SuiteReport,
    chains_suite,
    hyperbolic_suite,
    oracle_suite,
    realization_suite,
    run_suites,
)


class TestHyperbolicSuite:
    """Tests for the hyperbolic suite."""

    def test_passes(self, small_suites):
        """Test the entry families and the functional-equation rows."""
        report = hyperbolic_suite()
        assert report.suite == "hyperbolic"
        assert report.passed
        names = [result.check for result in report.checks]
        assert names[:3] == ["coth_identity", "convolution_identity", "even_order"]
        assert names.count("functional_equation") == 12

    def test_rows_carry_parameters(self, small_suites):
        """Test that every row names its i and N."""
        report = hyperbolic_suite(max_n=6, max_i=0)
        rows = [result.parameters for result in report.checks if result.check == "functional_equation"]
        assert rows == [{"i": 0, "N": 4}, {"i": 0, "N": 6}]


class TestChainsSuite:
    """Tests for the chains suite."""

    def test_passes(self, small_suites, heisenberg, so3):
        """Test that the abstract and concrete chain checks pass."""
        report = chains_suite(max_n=6, algebras=[heisenberg, so3])
        assert report.passed
        names = {result.check for result in report.checks}
        assert {"z_dimension", "jsi", "symmetry_expansion", "consistency_triangle"} <= names
        assert "concrete_shiftd" in names

    def test_special_symmetry_rank_is_gated(self, small_suites, so3):
        """Test that the special symmetry rank is checked against N // 2."""
        report = chains_suite(max_n=6, algebras=[so3])
        entry = next(result for result in report.checks if result.check == "special_symmetry_rank")
        assert entry.gated
        assert entry.passed
        assert entry.detail is None

    def test_su2_equal_is_data(self, small_suites, so3):
        """Test that su2-equal is recorded without gating."""
        report = chains_suite(max_n=4, algebras=[so3])
        entry = next(result for result in report.checks if result.check == "concrete_su2-equal")
        assert not entry.gated
        assert entry.detail.startswith("holds for N in")

    def test_triangle_bound(self, small_suites, so3):
        """Test that the consistency triangle follows an explicit bound."""
        report = chains_suite(max_n=4, algebras=[so3], triangle_max_n=4)
        rows = [result.parameters for result in report.checks if result.check == "consistency_triangle"]
        assert rows == [{"N": 4}]


class TestOracleSuite:
    """Tests for the oracle suite."""

    def test_passes(self, small_suites, heisenberg):
        """Test the oracle entries for one algebra."""
        report = oracle_suite(degree=2, algebras=[heisenberg])
        assert report.passed
        checks = [result.check for result in report.checks]
        assert checks[0] == "teq"
        assert checks.count("dhxn") == 2
        assert checks.count("exp_tangent") == 2


class TestRealizationSuite:
    """Tests for the realization suite."""

    def test_passes(self, small_suites, so3, heisenberg):
        """Test that the commutation relations are gated at lambda = 1."""
        report = realization_suite(order=3, algebras=[so3, heisenberg])
        assert report.suite == "realization"
        assert report.passed
        main = [
            result
            for result in report.checks
            if result.check == "commutators" and result.parameters["lambda"] == "1"
        ]
        assert [result.parameters["algebra"] for result in main] == ["so3", "heisenberg3"]
        assert all(result.gated and result.passed for result in main)
        names = {result.check for result in report.checks}
        assert {"lambda_reflection", "pde", "covariance"} <= names

    def test_lambda_family_gating(self, small_suites, so3, sl2):
        """Test that lambda != 1 gates only totally antisymmetric bases."""
        report = realization_suite(order=2, algebras=[so3, sl2])
        family = [
            result
            for result in report.checks
            if result.check == "commutators" and result.parameters["lambda"] != "1"
        ]
        assert {result.parameters["lambda"] for result in family} == {"0", "1/2", "2"}
        assert all(result.gated for result in family if result.parameters["algebra"] == "so3")
        assert not any(result.gated for result in family if result.parameters["algebra"] == "sl2")


class TestReports:
    """Tests for aggregation and serialization."""

    def test_ungated_failure_does_not_fail(self):
        """Test that data entries never fail a suite."""
        failing = CheckResult(check="data", passed=False, gated=False, detail="recorded")
        report = IdentitiesReport(passed=True, suites=[SuiteReport(suite="chains", passed=True, checks=[failing])])
        document = json.loads(report.to_json())
        assert document["pass"] is True
        assert document["suites"][0]["checks"][0] == {
            "check": "data",
            "parameters": {},
            "pass": False,
            "gated": False,
            "detail": "recorded",
        }

    def test_run_single_suite(self, small_suites):
        """Test selecting one suite."""
        report = run_suites(SuiteName.HYPERBOLIC, max_n=8, max_i=2)
        assert [suite.suite for suite in report.suites] == ["hyperbolic"]
        assert report.passed
        document = json.loads(report.to_json())
        assert document["pass"] is True
        assert all("detail" not in check for check in document["suites"][0]["checks"])

    def test_run_realization_suite(self, small_suites):
        """Test selecting the realization suite with an explicit order."""
        report = run_suites(SuiteName.REALIZATION, order=2)
        assert [suite.suite for suite in report.suites] == ["realization"]
        assert report.passed
