from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pclsa.algebra import (
    MSeries,
    QPoly,
    Truncation,
    binom,
    content,
    format_monomial,
    quotient,
    series_int_pow,
    series_inverse,
)
from pclsa.errors import NotInvertible, NotUnitSeries

small = st.integers(-6, 6)


def test_binom_matches_math_comb():
    for n in range(8):
        for k in range(8):
            assert binom(n, k) == comb(n, k)


def test_binom_negative_upper():
    # C(-n, k) = (-1)^k C(n+k-1, k)
    for n in range(1, 5):
        for k in range(5):
            assert binom(-n, k) == (-1) ** k * comb(n + k - 1, k)


def test_binom_rational_upper():
    assert binom(Fraction(1, 2), 2) == Fraction(-1, 8)


def test_qpoly_binomial_basis_values():
    p = QPoly([0, 2, 3])  # 2C(q,2)+3C(q,3) shifted to start at C(q,1)
    for q in range(-3, 6):
        assert p(q) == 2 * binom(q, 1) + 3 * binom(q, 2)


def test_qpoly_monomial_roundtrip():
    coeffs = [0, Fraction(1, 3), -2, Fraction(5, 6)]
    p = QPoly.from_monomial(coeffs)
    assert list(p.monomial()) == coeffs


def test_qpoly_rendering():
    p = QPoly.from_monomial([0, 0, Fraction(-1, 2), Fraction(1, 2)])
    assert str(p) == "q^3/2 - q^2/2"
    assert QPoly.binomial(2).binomial_str() == "C(q,2)"
    assert str(QPoly()) == "0"
    assert format_monomial([1, -1]) == "-q + 1"


def test_coeff_of_q_from_binomial_basis():
    # coefficient of q in C(q,k) is (-1)^(k-1)/k
    for k in range(1, 7):
        assert QPoly.binomial(k).coeff_of_q() == Fraction((-1) ** (k - 1), k)


@given(st.lists(small, max_size=5), st.lists(small, max_size=5), small)
def test_qpoly_ring_ops_evaluate_pointwise(a, b, q):
    pa, pb = QPoly(a), QPoly(b)
    assert (pa + pb)(q) == pa(q) + pb(q)
    assert (pa - pb)(q) == pa(q) - pb(q)
    assert (pa * pb)(q) == pa(q) * pb(q)


@given(st.integers(-4, 4), st.integers(0, 5), small)
def test_shifted_and_scaled_binomials(shift, k, q):
    assert QPoly.shifted_binomial(shift, k)(q) == binom(q - shift, k)
    assert QPoly.scaled_binomial(shift, k)(q) == binom(shift * q, k)


def test_content_and_quotient():
    assert content((4, 6, 0)) == 2
    assert quotient((4, 6, 0), 2) == (2, 3, 0)


def test_truncation_needs_a_cap():
    with pytest.raises(ValueError):
        Truncation(2)


def test_truncation_exponents_graded():
    t = Truncation.uniform(2, 2, 3)
    exps = list(t.exponents())
    assert exps[0] == (0, 0)
    assert [sum(e) for e in exps] == sorted(sum(e) for e in exps)
    assert set(exps) == {(a, b) for a in range(3) for b in range(3) if a + b <= 3}


def one_var(coeffs, deg):
    return MSeries(Truncation.total(1, deg), {(k,): c for k, c in enumerate(coeffs)})


def test_geometric_inverse():
    s = one_var([1, -1], 6)
    assert series_inverse(s) == one_var([1] * 7, 6)


def test_inverse_needs_constant_term():
    with pytest.raises(NotInvertible):
        series_inverse(one_var([0, 1], 3))


def test_int_pow_needs_unit():
    with pytest.raises(NotUnitSeries):
        series_int_pow(one_var([2, 1], 3), 2)


def test_int_pow_binomial_theorem():
    s = one_var([1, 1], 6)
    for q in range(-3, 4):
        expected = one_var([binom(q, k) for k in range(7)], 6)
        assert s ** q == expected


@st.composite
def unit_series(draw, nvars=2, degree=4):
    t = Truncation.total(nvars, degree)
    coeffs = {e: draw(small) for e in t.exponents() if any(e)}
    coeffs[(0,) * nvars] = 1
    return MSeries(t, coeffs)


@settings(max_examples=40)
@given(unit_series(), unit_series())
def test_series_product_of_inverses(a, b):
    one = MSeries.one(a.trunc)
    assert a * a.inverse() == one
    assert (a * b).inverse() == a.inverse() * b.inverse()


@settings(max_examples=30)
@given(unit_series(), st.integers(-3, 3), st.integers(-3, 3))
def test_int_pow_exponent_law(a, p, q):
    assert (a ** p) * (a ** q) == a ** (p + q)


def test_signed_and_specialize():
    t = Truncation.total(2, 2)
    s = MSeries(t, {(0, 0): 1, (1, 0): 2, (1, 1): 3, (0, 1): 1})
    assert s.signed()[(1, 0)] == -2
    assert s.signed()[(1, 1)] == 3
    assert s.specialize() == MSeries(Truncation.total(1, 2), {(0,): 1, (1,): 3, (2,): 3})


def test_differences_reports_offenders():
    t = Truncation.total(1, 3)
    a = MSeries(t, {(0,): 1, (2,): 5})
    b = MSeries(t, {(0,): 1, (2,): 4})
    assert a.differences(b) == [((2,), 5, 4)]
