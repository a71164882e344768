"""
Elements of the Weyl algebra A_n[[t]] truncated in t.

A monomial x^a d^b t^d is stored by its exponent triple (a, b, d), always in
normal order (every x left of every d). Multiplication re-normal-orders with

    d^b x^a = sum_c prod_i binom(b_i, c_i) binom(a_i, c_i) c_i! x^(a-c) d^(b-c)

which is the closed form of the relation [d^k, x_j] = delta^k_j.
"""
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Dict, Iterator, Mapping, Optional, Sequence, Tuple, Union

from lie2weyl.utils.config import config
from lie2weyl.utils.errors import DimensionMismatchError, PreconditionError, TermBudgetExceeded, TruncationError

Exponent = Tuple[int, ...]
MonomialKey = Tuple[Exponent, Exponent, int]
Scalar = Union[Fraction, int]


@lru_cache(maxsize=65536)
def reorder(b: Exponent, a: Exponent) -> Tuple[Tuple[Exponent, Exponent, int], ...]:
    """
    Normal order d^b x^a.

    Returns:
        Tuple of (x exponent, d exponent, integer weight) terms
    """
    options = []
    for bi, ai in zip(b, a):
        options.append([(c, comb(bi, c) * comb(ai, c) * factorial(c)) for c in range(min(ai, bi) + 1)])
    terms = []
    for choice in product(*options):
        weight = 1
        for _, w in choice:
            weight *= w
        cs = [c for c, _ in choice]
        terms.append(
            (
                tuple(ai - c for ai, c in zip(a, cs)),
                tuple(bi - c for bi, c in zip(b, cs)),
                weight,
            )
        )
    return tuple(terms)


def _add(left: Exponent, right: Exponent) -> Exponent:
    return tuple(p + q for p, q in zip(left, right))


class WeylElement:
    """
    Immutable element of A_n[[t]] known modulo t^(order+1).

    Stored coefficients are nonzero and every t-degree is at most the order.
    """

    __slots__ = ("_dim", "_order", "_terms")

    def __init__(self, dim: int, order: int, terms: Optional[Mapping[MonomialKey, Scalar]] = None):
        if dim < 1:
            raise PreconditionError(f"Weyl algebra dimension must be positive, got {dim}")
        if order < 0:
            raise PreconditionError(f"Truncation order must be non-negative, got {order}")
        cleaned: Dict[MonomialKey, Fraction] = {}
        for (a, b, d), coefficient in (terms or {}).items():
            if len(a) != dim or len(b) != dim:
                raise DimensionMismatchError(f"Exponent length does not match dimension {dim}")
            if min(a, default=0) < 0 or min(b, default=0) < 0 or d < 0:
                raise PreconditionError(f"Negative exponent in monomial {(a, b, d)}")
            value = Fraction(coefficient)
            if value and d <= order:
                key = (tuple(a), tuple(b), d)
                cleaned[key] = cleaned.get(key, Fraction(0)) + value
        self._dim = dim
        self._order = order
        self._terms = {key: value for key, value in cleaned.items() if value}
        _check_budget(len(self._terms))

    @classmethod
    def _wrap(cls, dim: int, order: int, terms: Dict[MonomialKey, Fraction]) -> "WeylElement":
        """Wrap an already clean term table."""
        element = cls.__new__(cls)
        element._dim = dim
        element._order = order
        element._terms = {key: value for key, value in terms.items() if value}
        _check_budget(len(element._terms))
        return element

    # Constructors

    @classmethod
    def zero(cls, dim: int, order: int) -> "WeylElement":
        return cls(dim, order)

    @classmethod
    def scalar(cls, dim: int, order: int, value: Scalar) -> "WeylElement":
        return cls.monomial(dim, order, coefficient=value)

    @classmethod
    def one(cls, dim: int, order: int) -> "WeylElement":
        return cls.scalar(dim, order, 1)

    @classmethod
    def t(cls, dim: int, order: int) -> "WeylElement":
        return cls.monomial(dim, order, d=1)

    @classmethod
    def x(cls, dim: int, order: int, i: int) -> "WeylElement":
        """The coordinate x_i, 0-based."""
        return cls.monomial(dim, order, a=_unit(dim, i))

    @classmethod
    def partial(cls, dim: int, order: int, i: int) -> "WeylElement":
        """The derivation d^i, 0-based."""
        return cls.monomial(dim, order, b=_unit(dim, i))

    @classmethod
    def monomial(
        cls,
        dim: int,
        order: int,
        a: Optional[Sequence[int]] = None,
        b: Optional[Sequence[int]] = None,
        d: int = 0,
        coefficient: Scalar = 1,
    ) -> "WeylElement":
        zeros = (0,) * dim
        key = (tuple(a) if a is not None else zeros, tuple(b) if b is not None else zeros, d)
        return cls(dim, order, {key: coefficient})

    # Accessors

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def order(self) -> int:
        return self._order

    @property
    def terms(self) -> Dict[MonomialKey, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[MonomialKey, Fraction]]:
        """Terms in canonical (d, a, b) order."""
        for key in sorted(self._terms, key=lambda k: (k[2], k[0], k[1])):
            yield key, self._terms[key]

    def coefficient(self, a: Sequence[int], b: Sequence[int], d: int = 0) -> Fraction:
        if d > self._order:
            raise TruncationError(f"t^{d} is beyond the truncation order {self._order}")
        return self._terms.get((tuple(a), tuple(b), d), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def has_x(self) -> bool:
        return any(any(a) for a, _, _ in self._terms)

    def has_partials(self) -> bool:
        return any(any(b) for _, b, _ in self._terms)

    def t_degree(self, d: int) -> "WeylElement":
        """The homogeneous part of t-degree d."""
        return WeylElement._wrap(self._dim, self._order, {k: v for k, v in self._terms.items() if k[2] == d})

    # Arithmetic

    def _check_dim(self, other: "WeylElement") -> None:
        if self._dim != other._dim:
            raise DimensionMismatchError(f"Weyl elements over dimensions {self._dim} and {other._dim}")

    def _linear(self, other: "WeylElement", sign: int) -> "WeylElement":
        self._check_dim(other)
        order = min(self._order, other._order)
        terms = {k: v for k, v in self._terms.items() if k[2] <= order}
        for key, value in other._terms.items():
            if key[2] <= order:
                terms[key] = terms.get(key, Fraction(0)) + sign * value
        return WeylElement._wrap(self._dim, order, terms)

    def __add__(self, other: "WeylElement") -> "WeylElement":
        return self._linear(other, 1)

    def __sub__(self, other: "WeylElement") -> "WeylElement":
        return self._linear(other, -1)

    def __neg__(self) -> "WeylElement":
        return WeylElement._wrap(self._dim, self._order, {k: -v for k, v in self._terms.items()})

    def scale(self, value: Scalar) -> "WeylElement":
        factor = Fraction(value)
        return WeylElement._wrap(self._dim, self._order, {k: v * factor for k, v in self._terms.items()})

    def __mul__(self, other: Union["WeylElement", Scalar]) -> "WeylElement":
        if isinstance(other, WeylElement):
            return normal_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other: Scalar) -> "WeylElement":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def shift(self, k: int = 1) -> "WeylElement":
        """Multiply by t^k."""
        terms = {(a, b, d + k): v for (a, b, d), v in self._terms.items() if d + k <= self._order}
        return WeylElement._wrap(self._dim, self._order, terms)

    def truncate(self, order: int) -> "WeylElement":
        if order > self._order:
            raise TruncationError(f"Cannot raise the truncation order from {self._order} to {order}")
        return WeylElement._wrap(self._dim, order, {k: v for k, v in self._terms.items() if k[2] <= order})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        if self._dim != other._dim:
            return False
        order = min(self._order, other._order)
        mine = {k: v for k, v in self._terms.items() if k[2] <= order}
        theirs = {k: v for k, v in other._terms.items() if k[2] <= order}
        return mine == theirs

    __hash__ = None  # type: ignore[assignment]

    # Rendering

    def render(self) -> str:
        """Canonical text, terms sorted by (d, a, b), indices 1-based."""
        if not self._terms:
            return "0"
        return " + ".join(_render_term(key, value) for key, value in self.items())

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"WeylElement(dim={self._dim}, order={self._order}, {self.render()})"


def _unit(dim: int, i: int) -> Exponent:
    if not 0 <= i < dim:
        raise PreconditionError(f"Index {i + 1} is out of range 1..{dim}")
    return tuple(int(j == i) for j in range(dim))


def _check_budget(size: int) -> None:
    if size > config.engine.max_terms:
        raise TermBudgetExceeded(f"Element has {size} monomials, above the budget of {config.engine.max_terms}")


def _render_term(key: MonomialKey, value: Fraction) -> str:
    a, b, d = key
    factors = []
    for name, exponent in [("x", a), ("d", b)]:
        for i, power in enumerate(exponent):
            if power == 1:
                factors.append(f"{name}{i + 1}")
            elif power > 1:
                factors.append(f"{name}{i + 1}^{power}")
    if d == 1:
        factors.append("t")
    elif d > 1:
        factors.append(f"t^{d}")
    if not factors:
        return str(value)
    return f"{value} · {' '.join(factors)}"


def normal_mul(u: WeylElement, v: WeylElement) -> WeylElement:
    """
    Exact product u*v in normal order.

    Args:
        u: Left factor
        v: Right factor over the same dimension

    Returns:
        WeylElement: The product, truncated to min(u.order, v.order)
    """
    u._check_dim(v)
    order = min(u.order, v.order)
    terms: Dict[MonomialKey, Fraction] = {}
    budget = config.engine.max_terms
    for (a1, b1, d1), c1 in u._terms.items():
        for (a2, b2, d2), c2 in v._terms.items():
            d = d1 + d2
            if d > order:
                continue
            coefficient = c1 * c2
            for a_rest, b_rest, weight in reorder(b1, a2):
                key = (_add(a1, a_rest), _add(b_rest, b2), d)
                terms[key] = terms.get(key, Fraction(0)) + weight * coefficient
            if len(terms) > budget:
                raise TermBudgetExceeded(f"Product exceeded the budget of {budget} monomials")
    return WeylElement._wrap(u.dim, order, terms)
