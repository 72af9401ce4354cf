"""Exact arithmetic: finite fields, truncated Laurent series, o_F/p^K, Lubin-Tate series."""

from .conway import conway_polynomial
from .fields import GF, get_field
from .padic import (
    OFRing,
    binomial_power,
    fbar,
    headroom_exponent,
    lt_mult_series,
    lt_series_mod_pi,
    padic_exponent,
)
from .series import Laurent, PrecisionError

__all__ = [
    "GF",
    "Laurent",
    "OFRing",
    "PrecisionError",
    "binomial_power",
    "conway_polynomial",
    "fbar",
    "get_field",
    "headroom_exponent",
    "lt_mult_series",
    "lt_series_mod_pi",
    "padic_exponent",
]
