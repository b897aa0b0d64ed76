from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from semicubic.errors import MixedRadicandError
from semicubic.exactnum import (
    QuadraticNumber,
    UniPolynomial,
    format_rational,
    parse_quadratic,
    parse_rational,
    poly_eval,
    quad_sign,
    squarefree_split,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=40)
radicands = st.sampled_from([2, 3, 5, 7])


@pytest.mark.parametrize(
    "a,b,d,expected",
    [(0, 0, 2, 0), (3, 0, 0, 1), (-3, 2, 2, -1), (3, -2, 2, 1), (-1, 1, 2, 1), (1, -1, 2, -1), (0, -1, 7, -1)],
)
def test_quad_sign_examples(a, b, d, expected):
    assert quad_sign(QuadraticNumber(F(a), F(b), d)) == expected


@given(rationals, rationals, radicands)
def test_quad_sign_agrees_with_float_away_from_zero(a, b, d):
    x = QuadraticNumber(a, b, d)
    approx = float(a) + float(b) * d**0.5
    if abs(approx) > 1e-9:
        assert quad_sign(x) == (1 if approx > 0 else -1)


@given(rationals, rationals, rationals, rationals, radicands)
def test_field_laws(a, b, c, e, d):
    x, y = QuadraticNumber(a, b, d), QuadraticNumber(c, e, d)
    assert x + y == y + x
    assert x * y == y * x
    assert (x + y) * x == x * x + y * x
    assert x - x == 0
    if y != 0:
        assert (x / y) * y == x


@given(rationals, rationals, rationals, radicands)
def test_distributive_over_three(a, b, c, d):
    x, y, z = QuadraticNumber(a, b, d), QuadraticNumber(b, c, d), QuadraticNumber(c, a, d)
    assert x * (y + z) == x * y + x * z
    assert (x * y) * z == x * (y * z)


def test_sqrt_extraction():
    assert QuadraticNumber.sqrt_of(F(28, 625)) == QuadraticNumber(0, F(2, 25), 7)
    assert QuadraticNumber.sqrt_of(F(9, 4)) == F(3, 2)
    r2 = QuadraticNumber.sqrt_of(2)
    assert r2 * r2 == 2
    assert squarefree_split(72) == (6, 2)


def test_mixed_radicands_rejected():
    with pytest.raises(MixedRadicandError):
        QuadraticNumber.sqrt_of(2) + QuadraticNumber.sqrt_of(3)


def test_rational_embedding_and_order():
    r2 = QuadraticNumber.sqrt_of(2)
    assert 1 < r2 < F(3, 2)
    assert -r2 < 0
    assert hash(QuadraticNumber(F(5), F(0), 0)) == hash(QuadraticNumber(F(5), F(0), 0))
    assert str(QuadraticNumber(F(2), F(1), 2)) == "2 + 1*sqrt(2)"


def test_parsing_round_trip():
    assert parse_rational("111/100") == F(111, 100)
    assert parse_rational("1e-9") == F(1, 10**9)
    assert parse_rational(" 3 ") == 3
    assert format_rational(F(10, 3)) == "10/3"
    assert format_rational(F(4)) == "4"
    with pytest.raises(ValueError):
        parse_rational("abc")
    q = parse_quadratic("2 + 1*sqrt(2)")
    assert q == QuadraticNumber(F(2), F(1), 2)


def test_poly_eval_examples():
    assert poly_eval([1, 4, 6], 1) == 11
    assert poly_eval(UniPolynomial([1, 4, 6]), F(1, 2)) == F(9, 2)
    r2 = QuadraticNumber.sqrt_of(2)
    assert poly_eval([0, 0, 1], r2) == 2


@given(st.lists(rationals, max_size=6), st.lists(rationals, max_size=6), rationals)
def test_polynomial_ring_homomorphism(p, q, t):
    P, Q = UniPolynomial(p), UniPolynomial(q)
    assert (P * Q)(t) == P(t) * Q(t)
    assert (P + Q)(t) == P(t) + Q(t)
    assert (P - Q)(t) == poly_eval(p, t) - poly_eval(q, t)


def test_polynomial_trimming():
    assert UniPolynomial([1, 2, 0, 0]).degree == 1
    assert UniPolynomial([]).coeff(5) == 0
    assert UniPolynomial.monomial(3, 2) == UniPolynomial([0, 0, 3])
