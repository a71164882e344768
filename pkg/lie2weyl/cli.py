"""
Command-line surface of the lie2weyl engine.

Subcommands realize, verify, identities, catalog, transform and oracle write
human text to standard output and, with --json, a UTF-8 JSON report. The exit
status is 0 on success, 1 when a gated check fails, 2 on usage errors, 3 when
an algebra fails validation and 4 on an internal invariant breach.
"""
import argparse
import json
import sys
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import Any, List, Optional, Sequence

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from lie2weyl.core.rational import format_rational, parse_rational
from lie2weyl.lie import (
    BasisTransform,
    StructureConstants,
    catalog,
    catalog_names,
    load_algebra,
    serialize_algebra,
    transform,
)
from lie2weyl.realization import check_order, realization_result
from lie2weyl.suites import IdentitiesReport, SuiteName, oracle_suite, run_suites
from lie2weyl.utils.config import config
from lie2weyl.utils.errors import Lie2WeylError, UsageError
from lie2weyl.verifier import check_commutators

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 4

# Options whose value may start with "-"
SIGNED_OPTIONS = ("--lambda",)


class Command(str, Enum):
    """Top-level subcommands."""

    REALIZE = "realize"
    VERIFY = "verify"
    IDENTITIES = "identities"
    CATALOG = "catalog"
    TRANSFORM = "transform"
    ORACLE = "oracle"


class RunConfig(BaseModel):
    """Validated arguments of one invocation."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    command: Command = Field(..., description="Subcommand to run")
    algebra: Optional[str] = Field(None, description="Catalog name or path of an algebra document")
    lam: Fraction = Field(Fraction(1), description="The parameter lambda")
    order: int = Field(config.engine.default_order, ge=0, description="Truncation order T, or degree D for oracle")
    suite: SuiteName = Field(SuiteName.ALL, description="Identity suite selector")
    output: Optional[Path] = Field(None, description="Path of the JSON report")
    threads: Optional[int] = Field(None, ge=1, description="Worker threads")
    max_n: Optional[int] = Field(None, ge=4, description="Largest N of the hyperbolic suite")
    max_i: Optional[int] = Field(None, ge=0, description="Largest i of the functional equation")
    matrix: Optional[str] = Field(None, description="Basis transform rows as JSON, inline or a file path")

    @field_validator("lam", mode="before")
    @classmethod
    def _parse_lambda(cls, value: Any) -> Fraction:
        return parse_rational(value)

    def require_algebra(self) -> StructureConstants:
        if not self.algebra:
            raise UsageError(f"{self.command.value} needs --algebra")
        return load_algebra(self.algebra)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lie2weyl",
        description="Exact Weyl-algebra realizations of Lie algebras and their identity checks.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        sub = subparsers.add_parser(name, help=help_text)
        sub.add_argument("--json", dest="output", default=None, help="Write the JSON report to this path.")
        sub.add_argument("--threads", type=int, default=None, help="Worker threads for independent checks.")
        return sub

    realize = add("realize", "Print the images Phi(X_i) of the basis.")
    verify = add("verify", "Check the commutation relations order by order.")
    for sub in (realize, verify):
        sub.add_argument("--algebra", required=True, help="Catalog name or path of an algebra document.")
        sub.add_argument("--lambda", dest="lam", default="1", help="The parameter lambda as p/q (default: 1).")
        sub.add_argument("--order", type=int, default=config.engine.default_order, help="Truncation order T.")

    identities = add("identities", "Run the identity suites.")
    identities.add_argument("--suite", choices=[name.value for name in SuiteName], default=SuiteName.ALL.value)
    identities.add_argument("--max-n", dest="max_n", type=int, help="Largest even N of the hyperbolic suite.")
    identities.add_argument("--max-i", dest="max_i", type=int, help="Largest i of the functional equation.")
    identities.add_argument("--order", type=int, default=None, help="Truncation order T of the realization suite.")

    listing = add("catalog", "List the catalog, or print one algebra document.")
    listing.add_argument("--algebra", default=None, help="Catalog name to print.")

    change = add("transform", "Apply a change of basis to an algebra.")
    change.add_argument("--algebra", required=True, help="Catalog name or path of an algebra document.")
    change.add_argument("--matrix", required=True, help="Matrix rows as JSON, inline or a file path.")

    oracle = add("oracle", "Compare the realization with the enveloping-algebra oracle.")
    oracle.add_argument("--algebra", required=True, help="Catalog name or path of an algebra document.")
    oracle.add_argument("--order", type=int, default=config.suites.oracle_degree, help="Degree bound D.")
    return parser


def _join_signed_values(argv: Sequence[str]) -> List[str]:
    """Rewrite `--lambda -3/4` as `--lambda=-3/4`."""
    joined: List[str] = []
    args = iter(argv)
    for arg in args:
        value = next(args, None) if arg in SIGNED_OPTIONS else None
        joined.append(arg if value is None else f"{arg}={value}")
    return joined


def parse_args(argv: Sequence[str]) -> RunConfig:
    """Parse argv into a RunConfig; argparse usage errors raise SystemExit(2)."""
    namespace = build_parser().parse_args(_join_signed_values(argv))
    values = {key: value for key, value in vars(namespace).items() if value is not None}
    try:
        return RunConfig(**values)
    except ValidationError as e:
        raise UsageError(f"Invalid arguments: {e.errors()[0]['msg']}")


def _write(path: Optional[Path], text: str) -> None:
    if path is None:
        return
    path.write_text(text, encoding="utf-8")
    logger.info(f"Wrote report to {path}")


def _read_matrix(text: str) -> BasisTransform:
    path = Path(text)
    source = path.read_text(encoding="utf-8") if path.is_file() else text
    try:
        rows = json.loads(source)
    except json.JSONDecodeError as e:
        raise UsageError(f"--matrix is neither a file nor JSON rows: {e}")
    if not isinstance(rows, list) or not all(isinstance(row, list) for row in rows):
        raise UsageError("--matrix must be a JSON list of rows")
    try:
        return BasisTransform.from_rows([[parse_rational(value) for value in row] for row in rows])
    except ValueError as e:
        raise UsageError(f"Invalid matrix entry: {e}")


def _realize(run_config: RunConfig) -> int:
    check_order(run_config.order)
    result = realization_result(run_config.require_algebra(), run_config.lam, run_config.order, run_config.threads)
    for i, text in enumerate(result.generators, start=1):
        print(f"Phi(X{i}) = {text}")
    _write(run_config.output, result.model_dump_json(by_alias=True, indent=2) + "\n")
    return EXIT_OK


def _verify(run_config: RunConfig) -> int:
    C = run_config.require_algebra()
    report = check_commutators(C, run_config.lam, run_config.order, run_config.threads)
    for pair in report.pairs:
        print(f"[X{pair.mu}, X{pair.nu}]: residual {pair.residual}")
    status = "pass" if report.passed else "FAIL"
    print(f"{C.label} lambda={format_rational(run_config.lam)} T={run_config.order}: {status} ({report.mode.value})")
    _write(run_config.output, report.to_json())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _print_identities(report: IdentitiesReport) -> None:
    for suite in report.suites:
        print(f"{suite.suite}: {'pass' if suite.passed else 'FAIL'} ({len(suite.checks)} checks)")
        for result in suite.checks:
            if not result.passed:
                label = "FAIL" if result.gated else "data"
                print(f"  {label} {result.check} {result.parameters} {result.detail or ''}".rstrip())


def _identities(run_config: RunConfig) -> int:
    report = run_suites(
        run_config.suite, run_config.max_n, run_config.max_i, run_config.threads, order=run_config.order
    )
    _print_identities(report)
    _write(run_config.output, report.to_json())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


def _catalog(run_config: RunConfig) -> int:
    if run_config.algebra:
        text = serialize_algebra(catalog(run_config.algebra))
        sys.stdout.write(text)
        _write(run_config.output, text)
        return EXIT_OK
    for name in catalog_names():
        print(name)
    _write(run_config.output, json.dumps(catalog_names(), indent=2) + "\n")
    return EXIT_OK


def _transform(run_config: RunConfig) -> int:
    C = run_config.require_algebra()
    O = _read_matrix(run_config.matrix or "")
    text = serialize_algebra(transform(C, O))
    sys.stdout.write(text)
    _write(run_config.output, text)
    return EXIT_OK


def _oracle(run_config: RunConfig) -> int:
    C = run_config.require_algebra()
    suite = oracle_suite(run_config.order, [C], run_config.threads)
    report = IdentitiesReport(passed=suite.passed, suites=[suite])
    _print_identities(report)
    _write(run_config.output, report.to_json())
    return EXIT_OK if report.passed else EXIT_CHECK_FAILED


_HANDLERS = {
    Command.REALIZE: _realize,
    Command.VERIFY: _verify,
    Command.IDENTITIES: _identities,
    Command.CATALOG: _catalog,
    Command.TRANSFORM: _transform,
    Command.ORACLE: _oracle,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command.

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        int: Process exit status
    """
    argv = sys.argv[1:] if argv is None else argv
    try:
        run_config = parse_args(argv)
        logger.debug(f"Running {run_config.command.value} with {run_config.model_dump(exclude_none=True)}")
        return _HANDLERS[run_config.command](run_config)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    except Lie2WeylError as e:
        logger.error(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.exception(f"Unexpected failure: {e}")
        print(f"error: internal failure: {e}", file=sys.stderr)
        return EXIT_INTERNAL
