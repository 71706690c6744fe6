"""Harmonic and odd harmonic numbers at integer and half-integer arguments,
plus generalized binomial coefficients with half-integer arguments.

Half-integer harmonic numbers live in Q[ln2]:

    H_{m - 1/2} = 2 O_m - 2 ln2        (m >= 0)

and arguments below -1/2 are reached by the downward recurrence
``H_{z-1} = H_z - 1/z``.
"""

from __future__ import annotations

import math
import threading
from functools import lru_cache

from gmpy2 import mpq

from .errors import DomainError, HarmonicPole, UnsupportedBinomial, ZeroDenominator
from .exact import HalfInt, LogValue, Rational, as_twice, to_rational
from .report import CheckReport, compare, skipped

_lock = threading.Lock()
_H = [mpq(0)]  # H_0, H_1, ...
_O = [mpq(0)]  # O_0, O_1, ...
_H_NEG_HALF = [LogValue(0, -2)]  # H_{-1/2}, H_{-3/2}, ...


def harmonic_int(n: int) -> Rational:
    """H_n for integer n >= 0 as a plain rational."""
    if n < 0:
        raise HarmonicPole(f"H at negative integer {n}")
    if n < len(_H):
        return _H[n]
    with _lock:
        while len(_H) <= n:
            _H.append(_H[-1] + mpq(1, len(_H)))
    return _H[n]


def odd_harmonic(n: int) -> Rational:
    """O_n = sum_{j=1}^n 1/(2j-1)."""
    if n < 0:
        raise DomainError(f"odd harmonic number at negative index {n}")
    if n < len(_O):
        return _O[n]
    with _lock:
        while len(_O) <= n:
            j = len(_O)
            _O.append(_O[-1] + mpq(1, 2 * j - 1))
    return _O[n]


def harmonic_half(twice: int) -> LogValue:
    """H_z for odd ``twice = 2z``."""
    if twice >= -1:
        m = (twice + 1) // 2
        return LogValue(2 * odd_harmonic(m), -2)
    i = (-1 - twice) // 2  # z = -1/2 - i
    if i < len(_H_NEG_HALF):
        return _H_NEG_HALF[i]
    with _lock:
        while len(_H_NEG_HALF) <= i:
            j = len(_H_NEG_HALF)
            z_above = mpq(-2 * (j - 1) - 1, 2)  # z + 1 for the new entry
            _H_NEG_HALF.append(_H_NEG_HALF[-1] - 1 / z_above)
    return _H_NEG_HALF[i]


def harmonic(z) -> LogValue:
    """H_z for an integer or half-integer ``z``; negative integers are poles."""
    twice = as_twice(z)
    if twice % 2 == 0:
        n = twice // 2
        if n < 0:
            raise HarmonicPole(f"H at negative integer {n}")
        return LogValue(harmonic_int(n), 0)
    return harmonic_half(twice)


def harmonic_general(n: int, m: int) -> Rational:
    if n < 0 or m < 1:
        raise DomainError("harmonic_general needs n >= 0 and m >= 1")
    return sum((mpq(1, j**m) for j in range(1, n + 1)), mpq(0))


def odd_harmonic_general(n: int, m: int) -> Rational:
    if n < 0 or m < 1:
        raise DomainError("odd_harmonic_general needs n >= 0 and m >= 1")
    return sum((mpq(1, (2 * j - 1) ** m) for j in range(1, n + 1)), mpq(0))


@lru_cache(maxsize=1 << 16)
def _falling_binom(upper: Rational, lower: int) -> Rational:
    num = mpq(1)
    for i in range(lower):
        num *= upper - i
    return num / math.factorial(lower)


def binom(upper, lower: int) -> Rational:
    """Generalized binomial coefficient with integer ``lower >= 0``.

    ``upper`` may be any rational (int, half-integer, ...).
    """
    if isinstance(lower, HalfInt):
        lower = int(lower)
    if lower < 0:
        raise DomainError(f"binomial lower index {lower} < 0")
    if isinstance(upper, int):
        if upper >= 0:
            return mpq(math.comb(upper, lower))
        # (-1)^k C(k - upper - 1, k)
        v = math.comb(lower - upper - 1, lower)
        return mpq(-v if lower % 2 else v)
    if isinstance(upper, HalfInt):
        upper = upper.to_rational()
    upper = to_rational(upper)
    if upper.denominator == 1:
        return binom(int(upper), lower)
    return _falling_binom(upper, lower)


def binom_halfint_lower(upper, lower) -> Rational:
    """Binomial coefficient in the half-integer family that reduces to rationals.

    Supported: integer ``lower >= 0`` (falling factorial), and half-integer
    ``lower`` with ``upper - lower`` an integer. Any other pattern would need
    Gamma values at half-integers and raises ``UnsupportedBinomial``.
    """
    try:
        lt = as_twice(lower)
    except ValueError:
        lt = None
    try:
        ut = as_twice(upper)
    except ValueError:
        ut = None
    if lt is None:
        raise UnsupportedBinomial(f"binomial with lower index {lower}")
    if lt % 2 == 0:
        return binom(upper if ut is None else HalfInt(ut), lt // 2)
    if ut is None or ut % 2 == 0:
        raise UnsupportedBinomial(f"binomial({upper}, {lower}) is not rational-reducible")
    d = (ut - lt) // 2
    if d < 0:
        # 1/Gamma(d+1) vanishes while Gamma(upper+1) is finite
        return mpq(0)
    return binom(HalfInt(ut), d)


def binom_any(upper, lower) -> Rational:
    """Binomial coefficient for integer or half-integer arguments, where rational."""
    lt = as_twice(lower)
    if lt % 2 == 0:
        k = lt // 2
        if k >= 0:
            return binom(upper, k)
        ut = as_twice(upper)
        if ut % 2 == 0 and ut < 0:
            raise UnsupportedBinomial(f"binomial({upper}, {k}) with both indices negative integers")
        return mpq(0)
    return binom_halfint_lower(upper, lower)


def binom_inv(upper, lower) -> Rational:
    b = binom_any(upper, lower)
    if b == 0:
        raise ZeroDenominator(f"inverse of vanishing binomial({upper}, {lower})")
    return 1 / b


# --- suites -----------------------------------------------------------------

LN2 = LogValue(0, 1)


def _h(twice: int) -> LogValue:
    return harmonic(HalfInt(twice))


def lemma2_suite(n_max: int) -> list[CheckReport]:
    """Eight half-integer harmonic relations for n in [0, n_max]."""
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    out = []
    for n in range(n_max + 1):
        a = (("n", n),)
        O_n, O_n1 = odd_harmonic(n), odd_harmonic(n + 1)
        lo, hi = 2 * n - 1, 2 * n + 1  # twice of n-1/2, n+1/2
        rels = [
            ("H[n-1/2] = 2O[n] - 2ln2", _h(lo), 2 * O_n - 2 * LN2),
            ("H[n-1/2] - H[-1/2] = 2O[n]", _h(lo) - _h(-1), 2 * O_n),
            ("H[n-1/2] - H[1/2] = 2(O[n] - 1)", _h(lo) - _h(1), 2 * (O_n - 1)),
            ("H[n+1/2] - H[-1/2] = 2O[n+1]", _h(hi) - _h(-1), 2 * O_n1),
            ("H[n+1/2] - H[1/2] = 2(O[n+1] - 1)", _h(hi) - _h(1), 2 * (O_n1 - 1)),
            ("H[n+1/2] - H[n-1/2] = 2/(2n+1)", _h(hi) - _h(lo), mpq(2, 2 * n + 1)),
            ("H[n-1/2] - H[-3/2] = 2(O[n] - 1)", _h(lo) - _h(-3), 2 * (O_n - 1)),
            ("H[n+1/2] - H[-3/2] = 2(O[n+1] - 1)", _h(hi) - _h(-3), 2 * (O_n1 - 1)),
        ]
        out.extend(compare(name, a, lhs, rhs) for name, lhs, rhs in rels)
    return out


def _c(n: int, k: int) -> Rational:
    # integer binomial that is zero outside 0 <= k <= n, including negative n
    if n < 0 or k < 0 or k > n:
        return mpq(0)
    return mpq(math.comb(n, k))


LEMMA3_FORMS = ("binom(r+1/2,s)", "binom(1/2,r)", "binom(r-1/2,s)", "binom(-1/2,r)")


def lemma3_suite(r_max: int, s_max: int | None = None) -> list[CheckReport]:
    """Closed forms of half-integer binomials against the falling-factorial definition.

    A point is Skipped when the closed form's denominator vanishes there.
    """
    if s_max is None:
        s_max = r_max
    out = []
    for r in range(r_max + 1):
        for s in range(s_max + 1):
            a = (("r", r), ("s", s))
            # (r+1/2 choose s) = ((2r+1)/(2s)) C(2s,s) / (C(r,s) 4^s)
            den = 2 * s * _c(r, s) * 4**s
            if den == 0:
                out.append(skipped(LEMMA3_FORMS[0], a, "closed-form denominator vanishes"))
            else:
                rhs = (2 * r + 1) * _c(2 * s, s) / den
                out.append(compare(LEMMA3_FORMS[0], a, binom(mpq(2 * r + 1, 2), s), rhs))
            # (r-1/2 choose s) = C(2r,r) C(r,s) / (C(2(r-s), r-s) 4^s)
            den = _c(2 * (r - s), r - s) * 4**s
            if den == 0:
                out.append(skipped(LEMMA3_FORMS[2], a, "closed-form denominator vanishes"))
            else:
                rhs = _c(2 * r, r) * _c(r, s) / den
                out.append(compare(LEMMA3_FORMS[2], a, binom(mpq(2 * r - 1, 2), s), rhs))
        a = (("r", r),)
        sign = 1 if (r + 1) % 2 == 0 else -1
        rhs = sign * _c(2 * r, r) / (mpq(4) ** r * (2 * r - 1))
        out.append(compare(LEMMA3_FORMS[1], a, binom(mpq(1, 2), r), rhs))
        sign = 1 if r % 2 == 0 else -1
        out.append(compare(LEMMA3_FORMS[3], a, binom(mpq(-1, 2), r), sign * _c(2 * r, r) / mpq(4) ** r))
    return out


HALFINT_REDUCTIONS = (
    "inv binom(p-1/2,-1/2) = 4^p/C(2p,p)",
    "H[-1/2] - H[p-1/2] = -2O[p]",
    "H[n-k-3/2] - H[p-1/2] = 2(O[n-k-1] - O[p])",
    "inv binom(p-1/2,r+1), k<n",
    "inv binom(r-1/2,r+1)",
)


def halfint_reduction_suite(r_max: int, n_max: int) -> list[CheckReport]:
    """Reductions used when the Gould-Quaintance identities are taken at m = -3/2.

    Here ``p = r + n - k``.
    """
    out = []
    four = mpq(4)
    for r in range(r_max + 1):
        for n in range(n_max + 1):
            for k in range(n + 1):
                p = r + n - k
                a = (("r", r), ("n", n), ("k", k))
                ph = HalfInt(2 * p - 1)
                lhs = binom_inv(ph, HalfInt(-1))
                mid = binom_inv(ph, p)
                rhs = four**p / _c(2 * p, p)
                if mid != lhs:
                    rhs = mid  # report the failing leg
                out.append(compare(HALFINT_REDUCTIONS[0], a, lhs, rhs))
                out.append(compare(HALFINT_REDUCTIONS[1], a, _h(-1) - _h(2 * p - 1), -2 * odd_harmonic(p)))
                if k < n:
                    out.append(compare(
                        HALFINT_REDUCTIONS[2], a,
                        _h(2 * (n - k) - 3) - _h(2 * p - 1),
                        2 * (odd_harmonic(n - k - 1) - odd_harmonic(p)),
                    ))
                    rhs = (
                        four ** (r + 1) * _c(2 * (n - k - 1), n - k - 1)
                        / (_c(2 * p, r + 1) * _c(p, r + 1))
                    )
                    out.append(compare(HALFINT_REDUCTIONS[3], a, binom_inv(ph, r + 1), rhs))
        a = (("r", r),)
        rhs = -(four ** -(r + 1)) / (r + 1) * _c(2 * r, r)
        out.append(compare(HALFINT_REDUCTIONS[4], a, binom_inv(HalfInt(2 * r - 1), r + 1), rhs))
    return out
