from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from arrinv.polyring import (BivariatePolynomial, TruncatedSeries,
                             geometric_sum, series_from_rational, ONE, X, T)

coeffs = st.dictionaries(
    st.tuples(st.integers(0, 5), st.integers(0, 4)),
    st.fractions(max_denominator=7).filter(lambda f: f != 0),
    max_size=6)
polys = coeffs.map(BivariatePolynomial)


@given(polys, polys, polys)
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + BivariatePolynomial.zero() == a
    assert a * ONE == a
    assert a - a == BivariatePolynomial.zero()


@given(polys, polys, st.fractions(max_denominator=5))
@settings(max_examples=60)
def test_substitute_is_a_ring_map(a, b, v):
    for var in ("x", "t"):
        assert (a + b).substitute(var, v) == \
            a.substitute(var, v) + b.substitute(var, v)
        assert (a * b).substitute(var, v) == \
            a.substitute(var, v) * b.substitute(var, v)


def test_monomial_and_accessors():
    p = X * X * T - 3 * X + ONE
    assert p.coeff(2, 1) == 1
    assert p.coeff(1, 0) == -3
    assert p.degree_x == 2
    assert p.degree_t == 1
    assert p.coeff_of_t(0) == ONE - 3 * X
    assert p.coeff_of_t(0).x_coefficient_list() == \
        [Fraction(1), Fraction(-3)]


def test_json_round_trip():
    p = 2 * X * T - ONE + BivariatePolynomial.monomial(3, 2, Fraction(1, 2))
    assert BivariatePolynomial.from_json(p.to_json()) == p


def test_geometric_sum_identity():
    for d in range(1, 6):
        assert geometric_sum(d) * (X - ONE) == \
            BivariatePolynomial.monomial(d, 0) - ONE


@given(polys, polys)
@settings(max_examples=40)
def test_series_linearity(a, b):
    cutoff = 8
    sa = TruncatedSeries.from_polynomial(a, cutoff)
    sb = TruncatedSeries.from_polynomial(b, cutoff)
    assert sa + sb == TruncatedSeries.from_polynomial(a + b, cutoff)


def test_series_from_rational_matches_geometric():
    # 1 / (1-x)^2 = sum (d+1) x^d
    s = series_from_rational(ONE, 2, 6)
    assert [int(c) for c in s.rational_coefficients()] == \
        [1, 2, 3, 4, 5, 6, 7]


def test_series_mul_poly_truncates():
    s = series_from_rational(ONE, 1, 5)     # all-ones
    t = s.mul_poly(ONE - X)
    assert [int(c) for c in t.rational_coefficients()] == [1, 0, 0, 0, 0, 0]
