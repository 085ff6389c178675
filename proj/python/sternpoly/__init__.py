"""Exact engine for base-b Stern polynomials and hyper b-ary expansions."""

import json as _json
from fractions import Fraction

from ._core import (
    Overflow,
    PolyParseError,
    SternPoly,
    a_digits,
    a_index,
    cf_verify,
    convergent,
    convergent_at_ones,
    enumerate_expansions,
    fib,
    finite_product_lhs,
    finite_product_rhs,
    max_order_constant,
    max_order_ratio,
    max_scan,
    multiplicity_support_check,
    oracle_poly,
    parse_poly,
    run_verify,
    specialize_z1,
    stern_count,
    stern_count_big,
    stern_count_digits,
    stern_poly,
    stern_via_matrix,
    thm_rec_check,
)

__all__ = [
    "Overflow",
    "PolyParseError",
    "SternPoly",
    "a_digits",
    "a_index",
    "cf_verify",
    "convergent",
    "convergent_at_ones",
    "convergent_fraction",
    "enumerate_expansions",
    "fib",
    "finite_product_lhs",
    "finite_product_rhs",
    "max_order_constant",
    "max_order_ratio",
    "max_scan",
    "multiplicity_support_check",
    "oracle_poly",
    "parse_poly",
    "poly_to_dict",
    "run_verify",
    "specialize_z1",
    "stern_count",
    "stern_count_big",
    "stern_count_digits",
    "stern_poly",
    "stern_via_matrix",
    "thm_rec_check",
]


def poly_to_dict(poly: SternPoly) -> dict:
    """Canonical JSON form of a polynomial, as a dict."""
    return _json.loads(poly.json_text())


def convergent_fraction(base: int, l: int, which: str = "odd") -> Fraction:
    """Continued-fraction convergent folded at z = t = 1."""
    num, den = convergent_at_ones(base, l, which)
    return Fraction(num, den)
