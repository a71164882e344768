"""
The enveloping algebra U(g_t) in the PBW basis.

A monomial z^a t^d stands for z_1^a_1 ... z_n^a_n t^d with the basis in
increasing order. Straightening uses [z_j, z_i] = sum_k C^k_{ji} z_k, and every
application of the bracket raises the bracket degree d by one, so d plays the
role of the grading parameter t of the realization. A straightening never
changes the weight |a| + d.
"""
import threading
from fractions import Fraction
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

from lie2weyl.lie.models import StructureConstants
from lie2weyl.utils.config import config
from lie2weyl.utils.errors import DimensionMismatchError, PreconditionError, TermBudgetExceeded, TruncationError

Exponent = Tuple[int, ...]
PBWKey = Tuple[Exponent, int]
Expansion = Tuple[Tuple[PBWKey, Fraction], ...]
Scalar = Union[Fraction, int]


def _bump(alpha: Exponent, i: int, delta: int) -> Exponent:
    return alpha[:i] + (alpha[i] + delta,) + alpha[i + 1:]


def _accumulate(target: Dict[PBWKey, Fraction], expansion: Expansion, coefficient: Fraction, shift: int) -> None:
    for (gamma, d), value in expansion:
        key = (gamma, d + shift)
        target[key] = target.get(key, Fraction(0)) + coefficient * value


class PBWAlgebra:
    """
    U(g_t) for fixed structure constants, truncated at bracket degree `order`.

    Straightening results are memoized per algebra; the caches are shared by
    every element and guarded by a lock.
    """

    def __init__(self, C: StructureConstants, order: int):
        if order < 0:
            raise PreconditionError(f"Bracket-degree order must be non-negative, got {order}")
        self.C = C
        self.dim = C.dim
        self.order = order
        self._lock = threading.Lock()
        self._generator_cache: Dict[Tuple[int, Exponent], Expansion] = {}
        self._monomial_cache: Dict[Tuple[Exponent, Exponent], Expansion] = {}
        self._coexp_cache: Dict[Exponent, "PBWElement"] = {}

    def _cached(self, cache: Dict, key):
        with self._lock:
            return cache.get(key)

    def _store(self, cache: Dict, key, value):
        with self._lock:
            cache.setdefault(key, value)
            return cache[key]

    def left_generator(self, j: int, beta: Exponent) -> Expansion:
        """
        Normal form of z_j z^beta, untruncated.

        If j is not larger than the first letter i of z^beta the product is
        already normal. Otherwise
        z_j z^beta = z_i (z_j z^(beta - e_i)) + sum_k C^k_{ji} z_k z^(beta - e_i) t.
        """
        key = (j, beta)
        cached = self._cached(self._generator_cache, key)
        if cached is not None:
            return cached

        first = next((i for i, power in enumerate(beta) if power), None)
        if first is None or j <= first:
            expansion: Expansion = (((_bump(beta, j, 1), 0), Fraction(1)),)
            return self._store(self._generator_cache, key, expansion)

        rest = _bump(beta, first, -1)
        terms: Dict[PBWKey, Fraction] = {}
        for (gamma, d), value in self.left_generator(j, rest):
            _accumulate(terms, self.left_generator(first, gamma), value, d)
        for k, coefficient in self.C.bracket(j, first).items():
            _accumulate(terms, self.left_generator(k, rest), coefficient, 1)
        expansion = tuple(sorted((key_, value) for key_, value in terms.items() if value))
        return self._store(self._generator_cache, key, expansion)

    def left_monomial(self, alpha: Exponent, beta: Exponent) -> Expansion:
        """Normal form of z^alpha z^beta, untruncated."""
        key = (alpha, beta)
        cached = self._cached(self._monomial_cache, key)
        if cached is not None:
            return cached

        last = next((i for i in reversed(range(self.dim)) if alpha[i]), None)
        if last is None:
            expansion: Expansion = (((beta, 0), Fraction(1)),)
            return self._store(self._monomial_cache, key, expansion)

        # z^alpha = z^(alpha - e_last) z_last
        terms: Dict[PBWKey, Fraction] = {}
        head = _bump(alpha, last, -1)
        for (gamma, d), value in self.left_generator(last, beta):
            _accumulate(terms, self.left_monomial(head, gamma), value, d)
        expansion = tuple(sorted((key_, value) for key_, value in terms.items() if value))
        return self._store(self._monomial_cache, key, expansion)

    # Element constructors

    def element(self, terms: Optional[Mapping[PBWKey, Scalar]] = None, order: Optional[int] = None) -> "PBWElement":
        return PBWElement(self, self.order if order is None else order, terms)

    def zero(self) -> "PBWElement":
        return self.element()

    def one(self) -> "PBWElement":
        return self.element({((0,) * self.dim, 0): 1})

    def generator(self, i: int) -> "PBWElement":
        """The basis element z_i, 0-based."""
        if not 0 <= i < self.dim:
            raise PreconditionError(f"Index {i + 1} is out of range 1..{self.dim}")
        return self.element({(tuple(int(k == i) for k in range(self.dim)), 0): 1})

    def monomial(self, alpha: Sequence[int], d: int = 0, coefficient: Scalar = 1) -> "PBWElement":
        return self.element({(tuple(alpha), d): coefficient})

    def linear(self, coefficients: Sequence[Scalar], d: int = 0) -> "PBWElement":
        """sum_i coefficients[i] z_i t^d"""
        terms = {}
        for i, value in enumerate(coefficients):
            if value:
                terms[(tuple(int(k == i) for k in range(self.dim)), d)] = value
        return self.element(terms)


class PBWElement:
    """Immutable element of U(g_t) in PBW normal form, known through bracket degree `order`."""

    __slots__ = ("_algebra", "_order", "_terms")

    def __init__(self, algebra: PBWAlgebra, order: int, terms: Optional[Mapping[PBWKey, Scalar]] = None):
        cleaned: Dict[PBWKey, Fraction] = {}
        for (alpha, d), coefficient in (terms or {}).items():
            if len(alpha) != algebra.dim:
                raise DimensionMismatchError(f"Exponent length does not match dimension {algebra.dim}")
            value = Fraction(coefficient)
            if value and d <= order:
                key = (tuple(alpha), d)
                cleaned[key] = cleaned.get(key, Fraction(0)) + value
        self._algebra = algebra
        self._order = order
        self._terms = {key: value for key, value in cleaned.items() if value}
        if len(self._terms) > config.engine.max_terms:
            raise TermBudgetExceeded(f"PBW element has {len(self._terms)} monomials")

    @property
    def algebra(self) -> PBWAlgebra:
        return self._algebra

    @property
    def order(self) -> int:
        return self._order

    @property
    def terms(self) -> Dict[PBWKey, Fraction]:
        return dict(self._terms)

    def coefficient(self, alpha: Sequence[int], d: int = 0) -> Fraction:
        if d > self._order:
            raise TruncationError(f"Bracket degree {d} is beyond the truncation order {self._order}")
        return self._terms.get((tuple(alpha), d), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def _same(self, other: "PBWElement") -> None:
        if self._algebra.dim != other._algebra.dim:
            raise DimensionMismatchError(f"PBW elements over dimensions {self._algebra.dim} and {other._algebra.dim}")

    def _linear(self, other: "PBWElement", sign: int) -> "PBWElement":
        self._same(other)
        terms = dict(self._terms)
        for key, value in other._terms.items():
            terms[key] = terms.get(key, Fraction(0)) + sign * value
        return PBWElement(self._algebra, min(self._order, other._order), terms)

    def __add__(self, other: "PBWElement") -> "PBWElement":
        return self._linear(other, 1)

    def __sub__(self, other: "PBWElement") -> "PBWElement":
        return self._linear(other, -1)

    def __neg__(self) -> "PBWElement":
        return self.scale(-1)

    def scale(self, value: Scalar) -> "PBWElement":
        factor = Fraction(value)
        return PBWElement(self._algebra, self._order, {k: v * factor for k, v in self._terms.items()})

    def __mul__(self, other: Union["PBWElement", Scalar]) -> "PBWElement":
        if isinstance(other, PBWElement):
            return pbw_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "PBWElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def shift(self, k: int = 1) -> "PBWElement":
        """Raise every bracket degree by k."""
        return PBWElement(self._algebra, self._order, {(a, d + k): v for (a, d), v in self._terms.items()})

    def truncate(self, order: int) -> "PBWElement":
        if order > self._order:
            raise TruncationError(f"Cannot raise the truncation order from {self._order} to {order}")
        return PBWElement(self._algebra, order, self._terms)

    def bracket_degree(self, d: int) -> "PBWElement":
        return PBWElement(self._algebra, self._order, {k: v for k, v in self._terms.items() if k[1] == d})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PBWElement):
            return NotImplemented
        if self._algebra.dim != other._algebra.dim:
            return False
        order = min(self._order, other._order)
        mine = {k: v for k, v in self._terms.items() if k[1] <= order}
        theirs = {k: v for k, v in other._terms.items() if k[1] <= order}
        return mine == theirs

    __hash__ = None  # type: ignore[assignment]

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (alpha, d), value in sorted(self._terms.items(), key=lambda item: (item[0][1], item[0][0])):
            factors = [f"z{i + 1}" if p == 1 else f"z{i + 1}^{p}" for i, p in enumerate(alpha) if p]
            if d:
                factors.append("t" if d == 1 else f"t^{d}")
            parts.append(f"{value} · {' '.join(factors)}" if factors else str(value))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"PBWElement({self.render()})"


def pbw_mul(u: PBWElement, v: PBWElement) -> PBWElement:
    """
    Product in PBW normal form.

    Args:
        u: Left factor
        v: Right factor over the same algebra

    Returns:
        PBWElement: u*v truncated at min(u.order, v.order)
    """
    u._same(v)
    algebra = u.algebra
    order = min(u.order, v.order)
    terms: Dict[PBWKey, Fraction] = {}
    for (alpha, d1), c1 in u._terms.items():
        for (beta, d2), c2 in v._terms.items():
            base = d1 + d2
            if base > order:
                continue
            for (gamma, d3), value in algebra.left_monomial(alpha, beta):
                if base + d3 <= order:
                    key = (gamma, base + d3)
                    terms[key] = terms.get(key, Fraction(0)) + c1 * c2 * value
    if len(terms) > config.engine.max_terms:
        raise TermBudgetExceeded(f"PBW product exceeded the budget of {config.engine.max_terms} monomials")
    return PBWElement(algebra, order, terms)
