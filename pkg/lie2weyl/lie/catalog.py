"""
Built-in catalog of Lie algebras with rational structure constants.
"""
from typing import Callable, Dict, List

from lie2weyl.lie.models import StructureConstants
from lie2weyl.utils.errors import UsageError

DEFAULT_CATALOG = ["abelian:3", "heisenberg3", "so3", "sl2", "ut3", "e2", "sl2_plus_abelian:1"]

# 0-based (i, j, k) -> C^k_{ij}
_SL2 = {(0, 1, 1): 2, (0, 2, 2): -2, (1, 2, 0): 1}

_FIXED: Dict[str, Callable[[], StructureConstants]] = {
    "heisenberg3": lambda: StructureConstants(dim=3, name="heisenberg3", entries={(0, 1, 2): 1}),
    "so3": lambda: StructureConstants(
        dim=3, name="so3", entries={(0, 1, 2): 1, (1, 2, 0): 1, (0, 2, 1): -1}
    ),
    "sl2": lambda: StructureConstants(dim=3, name="sl2", entries=dict(_SL2)),
    # basis (E12, E13, E23)
    "ut3": lambda: StructureConstants(dim=3, name="ut3", entries={(0, 2, 1): 1}),
    # basis (J, P1, P2)
    "e2": lambda: StructureConstants(dim=3, name="e2", entries={(0, 1, 2): 1, (0, 2, 1): -1}),
}


def catalog_names() -> List[str]:
    """Catalog names, parameterized families shown with their parameter."""
    return ["abelian:n"] + sorted(_FIXED) + ["sl2_plus_abelian:m"]


def _parameter(name: str, prefix: str, minimum: int) -> int:
    text = name[len(prefix):]
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"Catalog entry {name!r} needs an integer parameter")
    if value < minimum:
        raise UsageError(f"Catalog entry {name!r} needs a parameter of at least {minimum}")
    return value


def catalog(name: str) -> StructureConstants:
    """
    Look up a catalog algebra by name.

    Args:
        name: One of abelian:n, heisenberg3, so3, sl2, ut3, e2, sl2_plus_abelian:m

    Returns:
        StructureConstants: The algebra, labelled with its catalog name
    """
    key = name.strip()
    if key in _FIXED:
        return _FIXED[key]()
    if key.startswith("abelian:"):
        n = _parameter(key, "abelian:", 1)
        return StructureConstants(dim=n, name=f"abelian:{n}")
    if key.startswith("sl2_plus_abelian:"):
        m = _parameter(key, "sl2_plus_abelian:", 0)
        return StructureConstants(dim=3 + m, name=f"sl2_plus_abelian:{m}", entries=dict(_SL2))
    raise UsageError(f"Unknown catalog algebra {name!r}; known: {', '.join(catalog_names())}")


def default_catalog() -> List[StructureConstants]:
    """The algebras every identity suite runs over."""
    return [catalog(name) for name in DEFAULT_CATALOG]

