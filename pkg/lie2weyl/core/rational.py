"""
Exact rational scalars and their wire form.

Rationals are `fractions.Fraction` values; they serialize as "p/q", or "p"
when the denominator is 1.
"""
import math
import re
from fractions import Fraction
from typing import Union

RationalLike = Union[Fraction, int, str]

_RATIONAL_TEXT = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(value: RationalLike) -> Fraction:
    """
    Parse an exact rational.

    Args:
        value: A Fraction, an int, or text of the form "p/q" or "p"

    Returns:
        Fraction: The parsed value

    Raises:
        ValueError: For decimal text, floats, or a zero denominator
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValueError(f"Not a rational: {value!r}")

    match = _RATIONAL_TEXT.match(value)
    if match is None:
        raise ValueError(f"Not a rational of the form p/q: {value!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise ValueError(f"Zero denominator: {value!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    """Render a rational as "p/q", or "p" for integers."""
    return str(Fraction(value))


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero whenever the arguments are out of range."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)
