"""
Configuration management module for the lie2weyl engine.
"""
import os
from typing import Any, Dict

from pydantic import BaseModel, Field
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class EngineConfig(BaseModel):
    """Exact-arithmetic engine limits."""

    max_terms: int = Field(
        int(os.getenv("LIE2WEYL_MAX_TERMS", "2000000")),
        description="Maximum number of stored monomials in a single element",
    )
    default_order: int = Field(
        int(os.getenv("LIE2WEYL_DEFAULT_ORDER", "6")),
        description="Default truncation order T in the grading parameter t",
    )
    max_order: int = Field(
        int(os.getenv("LIE2WEYL_MAX_ORDER", "16")),
        description="Hard cap on any requested truncation order",
    )


class SuiteConfig(BaseModel):
    """Bounds of the identity suites."""

    max_n: int = Field(
        int(os.getenv("LIE2WEYL_MAX_N", "40")),
        description="Largest even N of the hyperbolic and even-order windows",
    )
    max_i: int = Field(
        int(os.getenv("LIE2WEYL_MAX_I", "10")),
        description="Largest i of the functional equation checks",
    )
    coth_max_i: int = Field(
        int(os.getenv("LIE2WEYL_COTH_MAX_I", "30")),
        description="Largest i of the coth derivative identity",
    )
    convolution_max_l: int = Field(
        int(os.getenv("LIE2WEYL_CONVOLUTION_MAX_L", "20")),
        description="Largest l of the Bernoulli convolution identity",
    )
    chain_max_n: int = Field(
        int(os.getenv("LIE2WEYL_CHAIN_MAX_N", "16")),
        description="Largest chain order N of the abstract chain calculus",
    )
    jsi_max: int = Field(
        int(os.getenv("LIE2WEYL_JSI_MAX", "25")),
        description="Upper bound of i, j, s in the binomial identity",
    )
    symmetry_max_s: int = Field(
        int(os.getenv("LIE2WEYL_SYMMETRY_MAX_S", "15")),
        description="Largest s of the symmetry expansion checks",
    )
    teq_max_n: int = Field(
        int(os.getenv("LIE2WEYL_TEQ_MAX_N", "25")),
        description="Largest n of the difference-operator identity",
    )
    tensor_max_n: int = Field(
        int(os.getenv("LIE2WEYL_TENSOR_MAX_N", "5")),
        description="Largest order N of the concrete chain tensors",
    )
    oracle_degree: int = Field(
        int(os.getenv("LIE2WEYL_ORACLE_DEGREE", "6")),
        description="Degree D of the enveloping-algebra oracle in the suites",
    )
    random_pairs: int = Field(
        int(os.getenv("LIE2WEYL_RANDOM_PAIRS", "3")),
        description="Random evaluation points per algebra in randomized checks",
    )
    seed: int = Field(
        int(os.getenv("LIE2WEYL_SEED", "1729")),
        description="Seed of the random rational test points",
    )


class RuntimeConfig(BaseModel):
    """Process-level runtime settings."""

    threads: int = Field(
        int(os.getenv("LIE2WEYL_THREADS", "1")),
        description="Number of worker threads for independent checks",
    )
    log_level: str = Field(
        os.getenv("LIE2WEYL_LOG_LEVEL", "INFO"),
        description="Minimum level of the stderr log sink",
    )


class Config:
    """Main configuration class for the engine."""

    def __init__(self):
        self.engine = EngineConfig()
        self.suites = SuiteConfig()
        self.runtime = RuntimeConfig()
        self.debug = os.getenv("LIE2WEYL_DEBUG", "False").lower() == "true"

    def as_dict(self) -> Dict[str, Any]:
        """Settings grouped by section, as logged at startup."""
        return {
            "engine": self.engine.model_dump(),
            "suites": self.suites.model_dump(),
            "runtime": self.runtime.model_dump(),
            "debug": self.debug,
        }


# Global config instance
config = Config()
