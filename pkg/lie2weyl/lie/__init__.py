"""
Lie algebra package for the lie2weyl engine.

This package provides structure constants, their validation, the built-in
catalog, basis transforms and document ingestion.
"""
from lie2weyl.lie.catalog import DEFAULT_CATALOG, catalog, catalog_names, default_catalog
from lie2weyl.lie.io import AlgebraDocument, load_algebra, parse_algebra, serialize_algebra
from lie2weyl.lie.models import BasisTransform, StructureConstants, ValidationReport
from lie2weyl.lie.transform import transform
from lie2weyl.lie.validation import validate

__all__ = [
    "DEFAULT_CATALOG",
    "catalog",
    "catalog_names",
    "default_catalog",
    "AlgebraDocument",
    "load_algebra",
    "parse_algebra",
    "serialize_algebra",
    "BasisTransform",
    "StructureConstants",
    "ValidationReport",
    "transform",
    "validate",
]
