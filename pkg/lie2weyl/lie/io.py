"""
Algebra documents: parsing, canonical serialization and loading.

Document schema (UTF-8 JSON, 1-based indices):

    {"dim": 3, "name": "heisenberg3", "brackets": [[1, 2, 3, "1"]]}

An entry [i, j, k, "p/q"] means C^k_{ij} = p/q; omitted triples are zero.
"""
import json
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from loguru import logger
from pydantic import BaseModel, Field, ValidationError

from lie2weyl.core.rational import format_rational, parse_rational
from lie2weyl.lie.catalog import catalog
from lie2weyl.lie.models import StructureConstants
from lie2weyl.lie.validation import validate
from lie2weyl.utils.errors import AlgebraError, UsageError


class AlgebraDocument(BaseModel):
    """Wire form of a structure-constant table."""

    dim: int = Field(..., description="Dimension n of the algebra")
    name: Optional[str] = Field(None, description="Optional label")
    brackets: List[Tuple[int, int, int, Union[str, int]]] = Field(
        default_factory=list, description="Entries [i, j, k, p/q] meaning C^k_{ij} = p/q"
    )


def parse_algebra(document: str) -> StructureConstants:
    """
    Parse and validate an algebra document.

    Entries given with i > j are closed antisymmetrically.

    Args:
        document: JSON text following the algebra schema

    Returns:
        StructureConstants: The validated algebra

    Raises:
        AlgebraError: Malformed JSON, an antisymmetry conflict or a Jacobi violation
    """
    try:
        parsed = AlgebraDocument.model_validate_json(document)
    except ValidationError as e:
        raise AlgebraError(f"Malformed algebra document: {e.errors()[0]['msg']}")

    if parsed.dim < 1:
        raise AlgebraError(f"Algebra dimension must be positive, got {parsed.dim}")

    raw: Dict[Tuple[int, int, int], Fraction] = {}
    for i, j, k, text in parsed.brackets:
        witness = [i, j, k]
        if not all(1 <= index <= parsed.dim for index in witness):
            raise AlgebraError(f"Bracket index out of range 1..{parsed.dim}", witness)
        try:
            value = parse_rational(text)
        except ValueError as e:
            raise AlgebraError(f"Bad structure constant: {e}", witness)
        key = (i - 1, j - 1, k - 1)
        if raw.get(key, value) != value:
            raise AlgebraError("Entry given twice with different values", witness)
        raw[key] = value

    entries: Dict[Tuple[int, int, int], Fraction] = {}
    for (i, j, k), value in raw.items():
        if i < j:
            entries[(i, j, k)] = value
        elif i > j:
            entries.setdefault((j, i, k), -value)

    C = StructureConstants(dim=parsed.dim, name=parsed.name, entries=entries)
    report = validate(C, raw)
    if not report.antisymmetric:
        raise AlgebraError("Antisymmetry fails", report.witnesses["antisymmetric"])
    if not report.jacobi:
        raise AlgebraError("Jacobi identity fails", report.witnesses["jacobi"])
    logger.debug(f"Parsed algebra {C.label} with {len(C.entries)} entries")
    return C


def serialize_algebra(C: StructureConstants) -> str:
    """Canonical document: only i < j, sorted by (i, j, k), trailing newline."""
    document: Dict[str, object] = {"dim": C.dim}
    if C.name is not None:
        document["name"] = C.name
    document["brackets"] = [
        [i + 1, j + 1, k + 1, format_rational(value)] for (i, j, k), value in sorted(C.entries.items())
    ]
    return json.dumps(document) + "\n"


def load_algebra(source: str) -> StructureConstants:
    """
    Load an algebra from a catalog name or a document path.

    Args:
        source: Catalog name (e.g. "so3", "abelian:4") or path to a JSON file

    Returns:
        StructureConstants: The loaded algebra
    """
    path = Path(source)
    if path.suffix == ".json" or path.is_file():
        if not path.is_file():
            raise UsageError(f"Algebra file not found: {source}")
        logger.info(f"Loading algebra from {path}")
        return parse_algebra(path.read_text(encoding="utf-8"))
    return catalog(source)
