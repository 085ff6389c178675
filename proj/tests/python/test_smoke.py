"""Smoke tests for the python extension."""

from fractions import Fraction

import pytest

import sternpoly as sp


def test_polynomial_text_and_equality():
    w13 = sp.stern_poly(13, 3)
    assert str(w13) == "z1^(t1 + t1^2) + z1^(t1^2)*z3 + z3^(1 + t3)"
    assert sp.parse_poly(str(w13), 3) == w13
    assert sp.oracle_poly(13, 3) == w13
    assert sp.stern_via_matrix(13, 3) == w13


def test_ring_operations():
    a = sp.stern_poly(4, 3)
    b = sp.stern_poly(7, 3)
    assert (a + b) == (b + a)
    assert (a * b) == (b * a)
    assert a.frobenius(1) == sp.parse_poly("z1^(t1^2) + z3^(t3)", 3)
    assert a.evaluate(["1", "1", "1"], [1, 1, 1]) == "2"
    assert a.evaluate(["1/2", "1", "3"], [2, 1, 1]) == "13/4"


def test_counts_and_expansions():
    assert sp.stern_count(10, 3) == 3
    assert sp.enumerate_expansions(9, 3) == [[0, 0, 1], [0, 3], [3, 2]]
    assert [sp.stern_count(n, 2) for n in range(1, 9)] == [1, 1, 2, 1, 3, 2, 3, 1]


def test_big_counting():
    n = 10**40 + 7
    assert sp.stern_count_big(n, 3) == sp.stern_count_big(str(n), 3)
    assert sp.stern_count_digits([1, 0, 1], 2) == 3
    # F_k at the maximal index a_k
    for k in (10, 50, 120):
        assert sp.stern_count_digits(sp.a_digits(k, 2), 2) == sp.fib(k)


def test_extremal_surface():
    assert sp.a_index(5, 2) == 11
    assert sp.fib(20) == 6765
    assert sp.max_scan(5, 2) == (5, 11)
    assert sp.thm_rec_check(3, 3)
    assert sp.cf_verify(2, 3, "odd") and sp.cf_verify(2, 3, "even")
    assert sp.convergent_fraction(2, 4, "odd") == Fraction(34, 21)
    num, den = sp.convergent(3, 1, "odd")
    assert str(num) == "z1^(t1) + z3" and str(den) == "1"


def test_json_shape():
    d = sp.poly_to_dict(sp.stern_poly(4, 3))
    assert d["base"] == 3
    assert [t["coeff"] for t in d["terms"]] == [1, 1]
    assert d["terms"][0]["exps"][0] == [[1, 1]]  # z1^(t1)


def test_finite_product_identity():
    lhs = sp.finite_product_lhs(3, 2, "symbolic")
    assert lhs == sp.finite_product_rhs(3, 2)
    assert lhs.evaluate_at_ones() == "16"


def test_errors():
    with pytest.raises(ValueError):
        sp.parse_poly("z9", 3)
    with pytest.raises(ValueError):
        sp.stern_count_big(-5, 2)
    with pytest.raises(OverflowError):
        sp.stern_poly(4, 3).evaluate(["2", "1", "1"], [2**33, 1, 1])


def test_verify_suite():
    checks = sp.run_verify("cf", l_max=2)
    assert checks and all(c["pass"] for c in checks)
