"""
Utilities for the lie2weyl engine.

This package provides configuration, the error hierarchy and the bounded
parallel fan-out shared by every module.
"""
from lie2weyl.utils.config import Config, EngineConfig, RuntimeConfig, SuiteConfig, config
from lie2weyl.utils.errors import (
    AlgebraError,
    DimensionMismatchError,
    InvariantBreachError,
    Lie2WeylError,
    PreconditionError,
    TermBudgetExceeded,
    TruncationError,
    UsageError,
)
from lie2weyl.utils.parallel import parallel_map

__all__ = [
    "Config",
    "EngineConfig",
    "RuntimeConfig",
    "SuiteConfig",
    "config",
    "AlgebraError",
    "DimensionMismatchError",
    "InvariantBreachError",
    "Lie2WeylError",
    "PreconditionError",
    "TermBudgetExceeded",
    "TruncationError",
    "UsageError",
    "parallel_map",
]
