"""
Report models for the verifier.
"""
from enum import Enum
from typing import Any, Dict, List

from pydantic import BaseModel, ConfigDict, Field


class VerificationMode(str, Enum):
    """Whether a verification outcome gates acceptance."""

    GATED = "gated"
    REPORT = "report"


class PairResidual(BaseModel):
    """Residual of the commutation relation for one pair mu < nu."""

    mu: int = Field(..., description="1-based index mu")
    nu: int = Field(..., description="1-based index nu")
    residual: str = Field(..., description="Canonical text of the residual, '0' when it vanishes")

    @property
    def vanishes(self) -> bool:
        return self.residual == "0"


class VerificationReport(BaseModel):
    """Order-by-order check that Phi_lambda is a Lie algebra homomorphism."""

    model_config = ConfigDict(populate_by_name=True)

    algebra: str = Field(..., description="Label of the algebra")
    lambda_: str = Field(..., alias="lambda", description="The parameter lambda as p/q")
    order: int = Field(..., description="Truncation order T")
    passed: bool = Field(..., alias="pass", description="True iff every residual is zero")
    pairs: List[PairResidual] = Field(default_factory=list, description="Residuals for mu < nu")
    mode: VerificationMode = Field(VerificationMode.GATED, exclude=True, description="Gating mode")
    timing: float = Field(0.0, exclude=True, description="Wall time in seconds")

    def to_json(self) -> str:
        return self.model_dump_json(by_alias=True, indent=2) + "\n"


class IdentityReport(BaseModel):
    """Outcome of a boolean identity check with the entries where it fails."""

    model_config = ConfigDict(populate_by_name=True)

    name: str = Field(..., description="Name of the identity")
    parameters: Dict[str, Any] = Field(default_factory=dict, description="Parameters of the run")
    witnesses: List[str] = Field(default_factory=list, description="Failing entries, 1-based")
    passed: bool = Field(..., alias="pass", description="True iff the identity holds everywhere")
