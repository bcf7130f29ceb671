from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gindex.algebra import (
    DiffPolynomial,
    TruncSeries,
    UniPoly,
    diffpoly_apply_cD,
    format_poly,
    one_minus_x_pow,
    series_pow_rational,
    substitute,
)

small = st.integers(min_value=-5, max_value=5)
polys = st.lists(small, max_size=5).map(UniPoly)
series = st.lists(small, max_size=8).map(lambda cs: TruncSeries(cs, 8))
unit_series = st.lists(small, max_size=7).map(lambda cs: TruncSeries([1] + cs, 8))
exponents = st.fractions(min_value=-3, max_value=3, max_denominator=4)


def test_unipoly_trims_and_formats():
    p = UniPoly([0, 1, 4, 0, 0])
    assert p.degree == 2
    assert format_poly(p) == "x + 4x^2"
    assert UniPoly().degree == -1
    assert format_poly(UniPoly()) == "0"


def test_unipoly_reversal():
    # N_2 = x^2 M_2(1/x) with M_2 = 1 + 2x
    assert UniPoly([1, 2]).reversal(2) == UniPoly([0, 2, 1])
    with pytest.raises(ValueError):
        UniPoly([1, 2, 3]).reversal(1)


@given(polys, polys, polys)
def test_unipoly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == UniPoly()


@given(polys, polys)
def test_unipoly_leibniz(a, b):
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(polys, st.integers(min_value=-4, max_value=4))
def test_unipoly_evaluation_is_a_homomorphism(p, v):
    q = p * p + 3
    assert q(v) == p(v) ** 2 + 3


def test_series_orders_must_match():
    with pytest.raises(ValueError):
        TruncSeries([1], 4) + TruncSeries([1], 5)


def test_series_derivative_drops_one_order():
    s = TruncSeries([1, 1, 1, 1], 4)
    assert s.derivative() == TruncSeries([1, 2, 3], 3)
    assert s.theta().order == 4


@given(series, series, series)
def test_series_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@settings(max_examples=50)
@given(unit_series, exponents, exponents)
def test_rational_power_additivity(s, p, q):
    assert series_pow_rational(s, p) * series_pow_rational(s, q) == series_pow_rational(s, p + q)


@settings(max_examples=30)
@given(unit_series, st.integers(min_value=0, max_value=4))
def test_rational_power_agrees_with_integer_power(s, e):
    assert series_pow_rational(s, e) == s**e


def test_one_minus_x_coefficients():
    # (1-x)^(-beta) has coefficient prod_{j<m} (beta + j) / (j + 1)
    beta = Fraction(1, 3)
    s = one_minus_x_pow(-beta, 10)
    for m in range(10):
        expected = Fraction(1)
        for j in range(m):
            expected *= (beta + j) / (j + 1)
        assert s[m] == expected


def test_half_power_squares_back():
    s = one_minus_x_pow(Fraction(1, 2), 12)
    assert s * s == TruncSeries([1, -1], 12)


def test_pow_needs_unit_constant_term():
    with pytest.raises(ValueError):
        series_pow_rational(TruncSeries([2, 1], 5), Fraction(1, 2))


c, c1, c2 = DiffPolynomial.c(0), DiffPolynomial.c(1), DiffPolynomial.c(2)


def test_diffpoly_derivative_of_c_power():
    assert (c * c).derivative() == 2 * c * c1
    assert DiffPolynomial.f(2).derivative() == DiffPolynomial.f(3)


def test_diffpoly_two_f_factors_rejected():
    with pytest.raises(ValueError):
        DiffPolynomial.f(1) * DiffPolynomial.f(2)


def test_apply_cD_twice():
    once = diffpoly_apply_cD(DiffPolynomial.f(0))
    twice = diffpoly_apply_cD(once)
    assert twice == c * c1 * DiffPolynomial.f(1) + c * c * DiffPolynomial.f(2)


diffpolys = st.lists(
    st.tuples(small, st.integers(0, 2), st.integers(0, 2), st.integers(0, 3)), max_size=4
).map(lambda terms: sum((DiffPolynomial.monomial(a, {0: e0, 1: e1}, f) for a, e0, e1, f in terms), DiffPolynomial()))
cpolys = st.lists(st.tuples(small, st.integers(0, 2), st.integers(0, 2)), max_size=3).map(
    lambda terms: sum((DiffPolynomial.monomial(a, {0: e0, 2: e2}) for a, e0, e2 in terms), DiffPolynomial())
)


@given(diffpolys, cpolys)
def test_diffpoly_leibniz(p, q):
    assert (p * q).derivative() == p.derivative() * q + p * q.derivative()


@given(diffpolys, diffpolys)
def test_diffpoly_derivative_is_linear(p, q):
    assert (p + 3 * q).derivative() == p.derivative() + 3 * q.derivative()


@given(diffpolys)
def test_diffpoly_json_round_trip(p):
    assert DiffPolynomial.from_json(p.to_json()) == p


def test_diffpoly_text_and_latex():
    p = 7 * c * c * c1 * c1 * DiffPolynomial.f(2) + 4 * c * c * c * c2 * DiffPolynomial.f(2)
    assert p.to_text() == "(7 c^2 c1^2 + 4 c^3 c2) f2"
    assert p.to_latex() == r"(7c^2 c_1^2 + 4c^3 c_2) \mathbf{f}_2"


def test_substitute_matches_direct_series():
    # (cD)^2 f with c = x and f = 1/(1-x):  x f' + x^2 f''
    order = 10
    body = c * c1 * DiffPolynomial.f(1) + c * c * DiffPolynomial.f(2)
    f = one_minus_x_pow(-1, order + 4)

    def f_family(k):
        s = f
        for _ in range(k):
            s = s.derivative()
        return s.truncate(order)

    value = substitute(body, {0: UniPoly.x(), 1: UniPoly([1])}, f_family, order)
    direct = f.truncate(order).theta().theta()
    assert value == direct


def test_substitute_missing_member():
    with pytest.raises(ValueError):
        substitute(c2 * DiffPolynomial.f(0), {0: 1}, {0: 1}, 5)
