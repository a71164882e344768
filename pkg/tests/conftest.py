"""
PyTest configuration for the lie2weyl engine.

This module provides algebra fixtures and the shared hypothesis profile.
"""
import pytest
from hypothesis import settings

from lie2weyl.lie import StructureConstants, catalog, default_catalog
from lie2weyl.utils.config import config

settings.register_profile("lie2weyl", max_examples=100, deadline=None)
settings.load_profile("lie2weyl")


@pytest.fixture
def so3() -> StructureConstants:
    """so(3): [X1, X2] = X3 and cyclic."""
    return catalog("so3")


@pytest.fixture
def heisenberg() -> StructureConstants:
    """Heisenberg algebra: [X1, X2] = X3."""
    return catalog("heisenberg3")


@pytest.fixture
def sl2() -> StructureConstants:
    """sl(2) in the basis (H, E, F)."""
    return catalog("sl2")


@pytest.fixture
def abelian3() -> StructureConstants:
    return catalog("abelian:3")


@pytest.fixture
def jacobi_violating() -> StructureConstants:
    """[X1, X2] = X3, [X1, X3] = X1: antisymmetric but not a Lie algebra."""
    return StructureConstants(dim=3, name="broken", entries={(0, 1, 2): 1, (0, 2, 0): 1})


@pytest.fixture
def catalog_algebras():
    """Every algebra of the default catalog."""
    return default_catalog()


@pytest.fixture
def small_suites(monkeypatch):
    """Shrink the suite bounds so whole suites run in a unit test."""
    for key, value in {
        "max_n": 8,
        "max_i": 3,
        "coth_max_i": 8,
        "convolution_max_l": 6,
        "chain_max_n": 6,
        "jsi_max": 6,
        "symmetry_max_s": 4,
        "teq_max_n": 6,
        "tensor_max_n": 2,
        "oracle_degree": 2,
        "random_pairs": 1,
    }.items():
        monkeypatch.setattr(config.suites, key, value)
    return config.suites
