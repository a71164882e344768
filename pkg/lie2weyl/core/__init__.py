"""
Exact arithmetic for the lie2weyl engine.

This package provides rational scalars, Bernoulli numbers, truncated power
series and univariate polynomials.
"""
from lie2weyl.core.bernoulli import (
    BernoulliTable,
    bernoulli,
    bernoulli_table,
    convolution_identity_check,
    even_coefficient,
    expansion_coefficient,
)
from lie2weyl.core.polynomial import Polynomial
from lie2weyl.core.rational import binom, format_rational, parse_rational
from lie2weyl.core.series import PowerSeries, f_series

__all__ = [
    "BernoulliTable",
    "bernoulli",
    "bernoulli_table",
    "convolution_identity_check",
    "even_coefficient",
    "expansion_coefficient",
    "Polynomial",
    "binom",
    "format_rational",
    "parse_rational",
    "PowerSeries",
    "f_series",
]
