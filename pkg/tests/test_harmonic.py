import time
from fractions import Fraction

import pytest
from gmpy2 import mpq
from hypothesis import given, strategies as st

from fibharm.errors import DomainError, HarmonicPole, UnsupportedBinomial
from fibharm.exact import HalfInt, LogValue
from fibharm.harmonic import (
    HALFINT_REDUCTIONS,
    LEMMA3_FORMS,
    binom,
    binom_any,
    binom_halfint_lower,
    binom_inv,
    halfint_reduction_suite,
    harmonic,
    harmonic_general,
    harmonic_int,
    lemma2_suite,
    lemma3_suite,
    odd_harmonic,
    odd_harmonic_general,
)
from fibharm.oracle import OracleContext, oracle_canonical
from fibharm.exact import canonical
from fibharm.report import Outcome


def test_harmonic_values():
    assert harmonic(3) == LogValue(mpq(11, 6))
    assert harmonic(HalfInt(-1)) == LogValue(0, -2)
    assert harmonic(HalfInt(-3)) == LogValue(2, -2)
    with pytest.raises(HarmonicPole):
        harmonic(-2)


def test_negative_integer_never_hits_cache():
    harmonic_int(10)
    with pytest.raises(HarmonicPole):
        harmonic_int(-1)


def test_odd_harmonic():
    assert odd_harmonic(0) == 0
    assert odd_harmonic(1) == 1
    assert odd_harmonic(3) == mpq(23, 15)
    with pytest.raises(DomainError):
        odd_harmonic(-1)


def test_general_order():
    assert harmonic_general(3, 2) == mpq(49, 36)
    assert harmonic_general(0, 5) == 0
    assert odd_harmonic_general(2, 2) == mpq(10, 9)
    with pytest.raises(DomainError):
        harmonic_general(3, 0)


def test_binom_values():
    assert binom(HalfInt(-1), 2) == mpq(3, 8)
    assert binom(7, 3) == 35
    assert binom(HalfInt(5), 0) == 1
    # the falling factorial gives 3/8 here (see ledger)
    assert binom(HalfInt(3), 2) == mpq(3, 8)
    with pytest.raises(DomainError):
        binom(3, -1)


def test_binom_halfint_lower():
    assert binom_halfint_lower(HalfInt(3), 2) == mpq(3, 8)
    assert binom_halfint_lower(HalfInt(3), HalfInt(-1)) == binom_any(HalfInt(3), HalfInt(-1))
    with pytest.raises(UnsupportedBinomial):
        binom_halfint_lower(HalfInt(5), mpq(1, 3))


def test_binom_inv_pole():
    with pytest.raises(ZeroDivisionError):
        binom_inv(1, 3)


def test_lemma2_examples():
    assert harmonic(HalfInt(3)) - harmonic(HalfInt(-1)) == LogValue(2 * odd_harmonic(2))
    assert 2 * odd_harmonic(2) == mpq(8, 3)
    assert harmonic(HalfInt(1)) == LogValue(2, -2)


def test_lemma2_suite_all_equal_and_fast():
    t0 = time.perf_counter()
    reports = lemma2_suite(200)
    assert time.perf_counter() - t0 < 1.0
    assert len(reports) == 8 * 201
    assert all(r.outcome is Outcome.EQUAL for r in reports)


def test_lemma3_suite_records_every_form():
    reports = lemma3_suite(25)
    names = {r.identity for r in reports}
    assert names == set(LEMMA3_FORMS)
    by_form = {f: [r for r in reports if r.identity == f] for f in LEMMA3_FORMS}
    # the three single-parameter and two-parameter forms beyond the first agree everywhere
    for f in LEMMA3_FORMS[1:]:
        assert all(r.outcome is not Outcome.UNEQUAL for r in by_form[f]), f
    # the first closed form as displayed disagrees with the falling factorial
    first = [r for r in by_form[LEMMA3_FORMS[0]] if r.outcome is Outcome.UNEQUAL]
    assert first and dict(first[0].assignment) == {"r": 1, "s": 1}


def test_halfint_reduction_examples():
    assert harmonic(HalfInt(-1)) - harmonic(HalfInt(3)) == LogValue(-2 * odd_harmonic(2))
    assert 2 * (odd_harmonic(0) - odd_harmonic(1)) == -2
    # inverse of binom(-1/2, 1) is -2
    assert binom_inv(HalfInt(-1), 1) == -2


def test_halfint_reduction_suite_outcomes():
    reports = halfint_reduction_suite(10, 15)
    bad = {r.identity for r in reports if r.outcome is Outcome.UNEQUAL}
    assert bad == {HALFINT_REDUCTIONS[3], HALFINT_REDUCTIONS[4]}


HALF_RANGE = [z for z in range(-40, 81) if not (z % 2 == 0 and z < 0)]


def test_recurrence_on_grid():
    for t in HALF_RANGE:
        if t - 2 < 0 and t % 2 == 0:
            continue
        z = HalfInt(t)
        assert harmonic(z) - harmonic(HalfInt(t - 2)) == LogValue(1 / z.to_rational())


def test_ln2_coefficients():
    for t in HALF_RANGE:
        h = harmonic(HalfInt(t))
        assert h.log2 == (-2 if t % 2 else 0)


@given(st.integers(-30, 30), st.integers(0, 15))
def test_pascal_half_integer(p, k):
    x = HalfInt(2 * p + 1)
    lhs = binom(x, k) + (binom(x, k - 1) if k >= 1 else 0)
    assert lhs == binom(x + 1, k)


@given(st.integers(-30, 40), st.integers(-30, 40))
def test_binom_any_against_oracle(xt, kt):
    x, k = HalfInt(xt), HalfInt(kt)
    try:
        ours = binom_any(x, k)
    except UnsupportedBinomial:
        with pytest.raises(UnsupportedBinomial):
            OracleContext.C(Fraction(xt, 2), Fraction(kt, 2))
        return
    assert canonical(ours) == oracle_canonical(OracleContext.C(Fraction(xt, 2), Fraction(kt, 2)))


@given(st.integers(-40, 80).filter(lambda t: t % 2 or t >= 0))
def test_harmonic_against_oracle(t):
    assert canonical(harmonic(HalfInt(t))) == oracle_canonical(OracleContext.H(Fraction(t, 2)))
