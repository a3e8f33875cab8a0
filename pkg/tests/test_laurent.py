"""Tests for the scalar ring Z[v, v^-1] and its fraction field."""

from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from hecke import LaurentPoly, RationalFn, parse_scalar, q_power, v_power

Q = q_power(1)
V = v_power(1)
ONE = LaurentPoly(1)
ZERO = LaurentPoly(0)

scalars = st.dictionaries(
    st.integers(min_value=-6, max_value=6),
    st.integers(min_value=-9, max_value=9),
    max_size=5,
).map(LaurentPoly)


def test_construction_and_predicates():
    assert ZERO.is_zero()
    assert ONE.is_one()
    assert not ZERO.is_one()
    assert LaurentPoly({2: 1}) == Q
    assert LaurentPoly({1: 1}) == V
    assert V * V == Q
    assert Q.is_monomial() and Q.is_unit()
    assert (Q + ONE).is_unit() is False
    assert LaurentPoly({-3: -1}).is_unit()


def test_cube_of_q_minus_one():
    p = (Q - ONE) ** 3
    assert p == LaurentPoly({6: 1, 4: -3, 2: 3, 0: -1})
    # at v = 2 we have q = 4, so (q-1)^3 = 27
    assert p.evaluate(2) == 27


def test_negative_exponents_evaluate_to_fractions():
    p = (ONE - q_power(-1)) ** 2
    assert p.evaluate(2) == Fraction(9, 16)
    assert p.evaluate(Fraction(1, 2)) == 9


def test_divexact():
    quotient = (Q * Q - ONE).divexact(Q - ONE)
    assert quotient == Q + ONE
    assert quotient.evaluate(3) == 10
    with pytest.raises(ArithmeticError):
        (Q * Q - ONE).divexact(Q - LaurentPoly(2))


def test_content_and_integer_division():
    p = LaurentPoly({2: 4, 0: -6})
    assert p.content() == 2
    assert p.divide_int(2) == LaurentPoly({2: 2, 0: -3})
    assert ZERO.content() == 0


def test_exponent_queries():
    p = LaurentPoly({4: 2, -3: 5})
    assert p.max_exp() == 4
    assert p.min_exp() == -3
    assert p.leading_coeff() == 2
    assert p.coeff(-3) == 5
    assert p.coeff(1) == 0
    assert p.num_terms() == 2
    assert p.has_even_exponents() is False
    assert (Q ** 3 - Q).has_even_exponents() is True


def test_shift_is_multiplication_by_v_power():
    p = Q - ONE
    assert p.shift(3) == p * v_power(3)
    assert p.shift(-2) == p * v_power(-2)


def test_str_forms():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert str(-ONE) == "-1"
    assert str(Q) == "q"
    assert str(V) == "v"
    assert str(q_power(-1)) == "q^-1"
    assert str(2 * Q) == "2*q"
    assert str(Q - ONE) == "q - 1"
    assert str(V - v_power(-1)) == "v - v^-1"
    assert str(v_power(3)) == "v^3"


def test_pairs_roundtrip():
    p = LaurentPoly({5: -2, 0: 7, -4: 1})
    assert LaurentPoly.from_pairs(p.to_pairs()) == p
    assert p.to_pairs() == [[-4, "1"], [0, "7"], [5, "-2"]]


@given(a=scalars, b=scalars, c=scalars)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@given(a=scalars, b=scalars)
def test_evaluate_is_a_ring_homomorphism(a, b):
    t = Fraction(3, 2)
    assert (a + b).evaluate(t) == a.evaluate(t) + b.evaluate(t)
    assert (a * b).evaluate(t) == a.evaluate(t) * b.evaluate(t)


@given(a=scalars)
def test_str_parse_roundtrip(a):
    assert parse_scalar(str(a)) == a


@given(a=scalars)
def test_pairs_roundtrip_random(a):
    assert LaurentPoly.from_pairs(a.to_pairs()) == a


def test_rational_arithmetic():
    rq = RationalFn.from_poly(Q)
    inv = rq.inverse()
    assert rq * inv == RationalFn.from_poly(ONE)
    total = rq + inv
    assert total.evaluate(2) == Fraction(17, 4)
    assert not total.is_zero()
    assert (rq - rq).is_zero()


def test_rational_cross_cancellation():
    # (q^2 - 1)/(q - 1) reduces against q + 1 exactly
    num = RationalFn.from_poly(Q * Q - ONE)
    den = RationalFn.from_poly(Q - ONE)
    ratio = num * den.inverse()
    assert ratio == RationalFn.from_poly(Q + ONE)


def test_xi_squared():
    xi = parse_scalar("xi")
    assert xi == V - v_power(-1)
    assert xi * xi == Q - LaurentPoly(2) + q_power(-1)
