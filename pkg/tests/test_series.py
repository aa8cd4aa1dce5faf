import itertools
from fractions import Fraction
from math import comb

import pytest
import sympy

from sracah.series import (
    IntPolynomial,
    LaurentSeriesInY,
    NonIntegralCoefficient,
    TruncatedSeries,
    a_tilde,
    catalan,
    check_gould_identity,
    check_palindrome,
    check_riordan_expansion,
    closed_form_series,
    compositions,
    constant_term_series,
    multigraded_series,
    p_poly,
    q_poly,
    q_poly_constant_term,
    riordan,
    riordan_binomial,
    riordan_expansion,
    three_way_agreement,
    tilde_formula_series,
)

t, x = sympy.symbols("t x")


# ---------------------------------------------------------------- containers


def test_int_polynomial_basics():
    p = IntPolynomial([1, 2, 0, 0])
    assert p.to_list() == [1, 2] and p.degree == 1
    assert p(3) == 7
    assert (p * p).to_list() == [1, 4, 4]
    assert (p ** 3).to_list() == [1, 6, 12, 8]
    assert p.reversed(2).to_list() == [0, 2, 1]
    with pytest.raises(ValueError):
        p.reversed(0)


def test_truncated_series_arithmetic():
    a = TruncatedSeries(4, [1, -1])
    inv = a.inverse()
    assert inv.to_list() == [1, 1, 1, 1, 1]
    assert (a * inv).to_list() == [1, 0, 0, 0, 0]
    assert (a + inv - a).to_list() == inv.to_list()
    with pytest.raises(NonIntegralCoefficient):
        TruncatedSeries(4, [2, 1]).inverse()
    with pytest.raises(NonIntegralCoefficient):
        TruncatedSeries(2, [Fraction(1, 2)])
    with pytest.raises(ValueError):
        TruncatedSeries(-1)


def test_laurent_constant_term():
    K = 3
    a = LaurentSeriesInY(K, {1: TruncatedSeries(K, [0, 1]), 0: TruncatedSeries(K, [1])})
    b = LaurentSeriesInY(K, {-1: TruncatedSeries(K, [0, 1]), 0: TruncatedSeries(K, [1])})
    # (1 + t y)(1 + t/y) has constant term 1 + t^2
    assert (a * b).constant_term().to_list() == [1, 0, 1, 0]


# ---------------------------------------------------------------- sequences


def test_catalan_examples():
    assert [catalan(r) for r in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert catalan(3) == comb(6, 3) - comb(6, 4)


def test_riordan_examples():
    expected = [1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603]
    assert [riordan(k) for k in range(11)] == expected
    assert [riordan_binomial(k) for k in range(11)] == expected


def test_riordan_against_sympy_constant_term():
    for k in range(6):
        expr = sympy.expand((1 - x) * (1 + x + 1 / x) ** k)
        assert riordan(k) == expr.as_coefficients_dict().get(sympy.Integer(1), 0)


def test_q_and_p_polynomials():
    assert q_poly(1).to_list() == [1, -1, 1]
    assert q_poly(1)(1) == catalan(1)
    assert p_poly(1).to_list() == [1, 0, 0, 1]
    assert p_poly(2).to_list() == [1, 0, 1, 4, 1, 0, 1]
    assert p_poly(2)(1) == 8 == 2**2 * catalan(2)


@pytest.mark.parametrize("r", range(11))
def test_q_poly_two_ways(r):
    assert q_poly(r) == q_poly_constant_term(r)


@pytest.mark.parametrize("r", range(13))
def test_evaluations_and_symmetries(r):
    assert q_poly(r)(1) == catalan(r)
    assert p_poly(r)(1) == 2**r * catalan(r)
    assert check_palindrome(r)
    assert check_riordan_expansion(r)


def test_riordan_expansion_small():
    assert riordan_expansion(0).to_list() == [1]
    assert riordan_expansion(2).to_list() == [1, 0, 1, 4, 1, 0, 1]


def test_gould_identity():
    assert check_gould_identity(0, 0, 0, 0)
    assert check_gould_identity(2, 1, 1, 2)
    for r, k in itertools.product(range(11), range(11)):
        for kp in (k, k + 1):
            assert check_gould_identity(r + 1, r, k, kp)


# ---------------------------------------------------------------- series


def test_closed_form_examples():
    assert closed_form_series(2, 4).to_list() == [1, 0, 3, 0, 6]
    assert closed_form_series(3, 5).to_list() == [1, 0, 6, 1, 21, 6]
    assert closed_form_series(4, 5)[5] == 36


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_closed_form_against_sympy(n):
    r = n - 2
    num = sum(c * t**k for k, c in enumerate(p_poly(r).to_list()))
    ser = sympy.series(num / (1 - t**2) ** (3 * (r + 1)), t, 0, 13).removeO()
    expected = [int(ser.coeff(t, k)) for k in range(13)]
    assert closed_form_series(n, 12).to_list() == expected


def test_small_truncations():
    assert constant_term_series(2, 0).to_list() == [1]
    assert tilde_formula_series(3, 0).to_list() == [1]
    assert [a_tilde(2, k) for k in range(3)] == [1, 2, 4]


@pytest.mark.parametrize("n", range(2, 9))
def test_three_routes_agree(n):
    ok, routes = three_way_agreement(n, 20)
    assert ok, routes


def test_n_must_be_at_least_two():
    for f in (closed_form_series, constant_term_series, tilde_formula_series):
        with pytest.raises(ValueError):
            f(1, 3)


# ---------------------------------------------------------------- multigraded


def test_compositions_are_lexicographic_and_complete():
    got = list(compositions(3, 3))
    assert got == sorted(got)
    assert len(got) == comb(5, 2)
    assert list(compositions(2, 2, caps=(1, 1))) == [(1, 1)]
    assert list(compositions(0, 0)) == [()]


def test_multigraded_examples():
    ms = multigraded_series(2, 3)
    assert ms[(0, 0)] == 1
    assert ms[(1, 1)] == 1
    assert ms[(1, 0)] == 0


def test_multigraded_against_brute_force():
    # expand the defining product directly with sympy for n = 2 and compare
    n, B = 2, 4
    ts = sympy.symbols("t1 t2")
    numer = 0
    for k in range(B + 1):
        for mu in compositions(k, n):
            for nu in compositions(k, n):
                numer += sympy.Mul(*[v ** (m + q) for v, m, q in zip(ts, mu, nu)])
            if k:
                for nu in compositions(k - 1, n):
                    numer -= sympy.Mul(*[v ** (m + q) for v, m, q in zip(ts, mu, nu)])
    geo = sympy.Mul(*[sum(v**e for e in range(B + 1)) for v in ts])
    poly = sympy.Poly(sympy.expand(numer * geo), *ts)
    ms = multigraded_series(n, B)
    for exps in itertools.product(range(B + 1), repeat=n):
        assert ms[exps] == poly.coeff_monomial(exps), exps


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_multigraded_specialization(n):
    ms = multigraded_series(n, 10, max_total=10)
    assert ms.specialize().to_list() == tilde_formula_series(n, 10).to_list()


def test_multigraded_rejects_bad_bounds():
    with pytest.raises(ValueError):
        multigraded_series(3, (1, 2))
    with pytest.raises(ValueError):
        multigraded_series(2, -1)
