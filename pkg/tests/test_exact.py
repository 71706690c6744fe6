import pytest
from fractions import Fraction
from gmpy2 import mpfr, mpq
from hypothesis import given, strategies as st

from fibharm.errors import DegreeOverflow, DivisionByZero, ParseError
from fibharm.exact import (
    HalfInt,
    HalfIntKind,
    LogValue,
    canonical,
    halfint_classify,
    logvalue_add,
    logvalue_mul,
    logvalue_scale,
    parse_halfint,
    parse_logvalue,
    parse_rational,
    rational_add,
    rational_inv,
    rational_mul,
    rational_neg,
    render_halfint,
    render_logvalue,
    render_rational,
)

rationals = st.builds(lambda p, q: mpq(p, q), st.integers(-10**30, 10**30), st.integers(1, 10**12))
logvalues = st.builds(LogValue, rationals, rationals)


def test_rational_examples():
    assert rational_add(mpq(1, 2), mpq(1, 3)) == mpq(5, 6)
    assert render_rational(mpq(2, 4)) == "1/2"
    assert rational_neg(mpq(3, 7)) == mpq(-3, 7)
    assert rational_mul(mpq(2, 3), mpq(3, 4)) == mpq(1, 2)
    with pytest.raises(DivisionByZero):
        rational_inv(0)


def test_zero_is_canonical():
    z = rational_add(mpq(1, 3), mpq(-1, 3))
    assert (z.numerator, z.denominator) == (0, 1)
    assert render_rational(z) == "0"


def test_logvalue_examples():
    assert logvalue_add(LogValue(mpq(1, 2), 1), LogValue(mpq(1, 2), -1)) == LogValue(1, 0)
    assert logvalue_add(LogValue(0, -2), LogValue(2, 0)) == LogValue(2, -2)
    assert logvalue_scale(2, LogValue(0, -1)) == LogValue(0, -2)
    assert logvalue_scale(0, LogValue(5, 7)) == LogValue()
    assert logvalue_mul(LogValue(3), LogValue(0, -2)) == LogValue(0, -6)
    with pytest.raises(DegreeOverflow):
        logvalue_mul(LogValue(0, -2), LogValue(0, -2))


def test_rendering():
    assert render_logvalue(LogValue(2, -2)) == "2 + (-2)*ln2"
    assert render_logvalue(LogValue(0, 1)) == "(1)*ln2"
    assert render_logvalue(LogValue(mpq(-1, 3))) == "-1/3"
    assert render_halfint(HalfInt(-3)) == "-3/2"
    assert render_halfint(HalfInt(4)) == "2"


def test_floats_rejected():
    with pytest.raises(TypeError):
        LogValue(0.5)
    with pytest.raises(TypeError):
        LogValue(0, mpfr("0.5"))
    with pytest.raises(TypeError):
        HalfInt.of(0.5)


def test_halfint_classify():
    assert halfint_classify(HalfInt(5)) is HalfIntKind.POSITIVE_HALF
    assert halfint_classify(HalfInt(-6)) is HalfIntKind.NEG_INTEGER
    assert halfint_classify(HalfInt(0)) is HalfIntKind.ZERO
    assert halfint_classify(HalfInt(-1)) is HalfIntKind.NEGATIVE_HALF
    assert halfint_classify(HalfInt(8)) is HalfIntKind.NON_NEG_INTEGER


def test_halfint_arithmetic_and_order():
    a, b = HalfInt(3), HalfInt(-1)
    assert a + b == HalfInt(2) and (a + b).is_integer
    assert a - 1 == HalfInt(1)
    assert b < a
    with pytest.raises(ValueError):
        HalfInt.of(Fraction(1, 3))


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_rational("1.5")
    with pytest.raises(ParseError):
        parse_halfint("1/3")


def test_canonical_is_backend_independent():
    assert canonical(mpq(-2, 4)) == canonical(Fraction(-1, 2)) == (-1, 2, 0, 1)
    assert canonical(LogValue(1, mpq(2, 3))) == (1, 1, 2, 3)


@given(rationals, rationals, rationals)
def test_field_axioms(a, b, c):
    assert rational_add(a, rational_add(b, c)) == rational_add(rational_add(a, b), c)
    assert rational_mul(a, rational_mul(b, c)) == rational_mul(rational_mul(a, b), c)
    assert rational_add(a, b) == rational_add(b, a)
    assert rational_mul(a, b) == rational_mul(b, a)
    assert rational_mul(a, rational_add(b, c)) == rational_add(rational_mul(a, b), rational_mul(a, c))
    if a != 0:
        assert rational_mul(a, rational_inv(a)) == 1


@given(rationals)
def test_rational_roundtrip(x):
    assert parse_rational(render_rational(x)) == x


@given(logvalues)
def test_logvalue_roundtrip(x):
    assert parse_logvalue(render_logvalue(x)) == x


@given(rationals, rationals, rationals, rationals)
def test_logvalue_equality_is_coefficientwise(a1, b1, a2, b2):
    assert (LogValue(a1, b1) == LogValue(a2, b2)) == (a1 == a2 and b1 == b2)


@given(logvalues, logvalues, rationals)
def test_logvalue_ring_ops(x, y, c):
    assert x + y == y + x
    assert x - x == LogValue()
    assert logvalue_scale(c, x + y) == logvalue_scale(c, x) + logvalue_scale(c, y)
    assert logvalue_mul(LogValue(c), x) == logvalue_scale(c, x)


@given(st.integers(-10**6, 10**6))
def test_halfint_roundtrip(t):
    h = HalfInt(t)
    assert parse_halfint(render_halfint(h)) == h
    assert h.is_integer == (t % 2 == 0)
    assert h.to_rational() == mpq(t, 2)
