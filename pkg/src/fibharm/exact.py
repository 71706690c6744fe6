"""Exact scalars: rationals, the ring Q[ln2] and half-integer indices.

Rationals are ``gmpy2.mpq`` values, which are normalized on construction.
``LogValue`` represents ``a + b*ln2`` with rational ``a`` and ``b``; ln2 is a
formal symbol, so equality is coefficient-wise.
"""

from __future__ import annotations

import enum
import re
from fractions import Fraction
from typing import Union

from gmpy2 import mpfr, mpq, mpz

from .errors import DegreeOverflow, DivisionByZero, ParseError

Rational = type(mpq())
RationalLike = Union[int, Rational, Fraction]

ZERO = mpq(0)
ONE = mpq(1)


def to_rational(x) -> Rational:
    if isinstance(x, float):
        raise TypeError("floating-point values are not allowed in exact arithmetic")
    if isinstance(x, HalfInt):
        return mpq(x.twice, 2)
    return mpq(x)


def rational_add(x: RationalLike, y: RationalLike) -> Rational:
    return to_rational(x) + to_rational(y)


def rational_mul(x: RationalLike, y: RationalLike) -> Rational:
    return to_rational(x) * to_rational(y)


def rational_neg(x: RationalLike) -> Rational:
    return -to_rational(x)


def rational_inv(x: RationalLike) -> Rational:
    x = to_rational(x)
    if x == 0:
        raise DivisionByZero("inverse of zero")
    return 1 / x


def render_rational(x: RationalLike) -> str:
    x = to_rational(x)
    if x.denominator == 1:
        return str(int(x.numerator))
    return f"{int(x.numerator)}/{int(x.denominator)}"


_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Rational:
    m = _RAT_RE.match(text)
    if not m:
        raise ParseError(f"not a rational: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ParseError(f"zero denominator: {text!r}")
    return mpq(num, den)


_INEXACT = (float, type(mpfr(0)), complex)


class LogValue:
    """Element ``rat + log2*ln2`` of Q[ln2]. Immutable."""

    __slots__ = ("rat", "log2")

    def __init__(self, rat: RationalLike = 0, log2: RationalLike = 0):
        # mpq() accepts floats, so screen them here
        if isinstance(rat, _INEXACT) or isinstance(log2, _INEXACT):
            raise TypeError("floating-point values are not allowed in LogValue")
        object.__setattr__(self, "rat", mpq(rat))
        object.__setattr__(self, "log2", mpq(log2))

    def __setattr__(self, name, value):
        raise AttributeError("LogValue is immutable")

    def __reduce__(self):
        return (LogValue, (self.rat, self.log2))

    @classmethod
    def coerce(cls, x) -> "LogValue":
        if isinstance(x, LogValue):
            return x
        return cls(to_rational(x), 0)

    @property
    def is_rational(self) -> bool:
        return self.log2 == 0

    def __add__(self, other):
        if isinstance(other, LogValue):
            return LogValue(self.rat + other.rat, self.log2 + other.log2)
        if isinstance(other, float):
            return NotImplemented
        return LogValue(self.rat + other, self.log2)

    __radd__ = __add__

    def __neg__(self):
        return LogValue(-self.rat, -self.log2)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, LogValue):
            return LogValue(self.rat - other.rat, self.log2 - other.log2)
        if isinstance(other, float):
            return NotImplemented
        return LogValue(self.rat - other, self.log2)

    def __rsub__(self, other):
        if isinstance(other, float):
            return NotImplemented
        return LogValue(other - self.rat, -self.log2)

    def __mul__(self, other):
        if isinstance(other, LogValue):
            if self.log2 != 0 and other.log2 != 0:
                raise DegreeOverflow("product of two values with nonzero ln2 parts")
            return LogValue(
                self.rat * other.rat,
                self.rat * other.log2 + self.log2 * other.rat,
            )
        if isinstance(other, float):
            return NotImplemented
        return LogValue(self.rat * other, self.log2 * other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, LogValue):
            if other.log2 != 0:
                raise DegreeOverflow("division by a value with nonzero ln2 part")
            other = other.rat
        elif isinstance(other, float):
            return NotImplemented
        if other == 0:
            raise DivisionByZero("LogValue divided by zero")
        return LogValue(self.rat / other, self.log2 / other)

    def __eq__(self, other):
        if isinstance(other, LogValue):
            return self.rat == other.rat and self.log2 == other.log2
        if isinstance(other, (int, Rational, Fraction)):
            return self.log2 == 0 and self.rat == other
        return NotImplemented

    def __hash__(self):
        if self.log2 == 0:
            return hash(self.rat)
        return hash((self.rat, self.log2))

    def __repr__(self):
        return f"LogValue({render_rational(self.rat)!r}, {render_rational(self.log2)!r})"

    def __str__(self):
        return render_logvalue(self)


def logvalue_add(x: LogValue, y: LogValue) -> LogValue:
    return LogValue.coerce(x) + LogValue.coerce(y)


def logvalue_scale(c: RationalLike, x: LogValue) -> LogValue:
    return LogValue.coerce(x) * to_rational(c)


def logvalue_mul(x: LogValue, y: LogValue) -> LogValue:
    return LogValue.coerce(x) * LogValue.coerce(y)


def render_logvalue(x) -> str:
    x = LogValue.coerce(x)
    if x.log2 == 0:
        return render_rational(x.rat)
    coef = f"({render_rational(x.log2)})*ln2"
    if x.rat == 0:
        return coef
    return f"{render_rational(x.rat)} + {coef}"


_LOG_RE = re.compile(r"^\s*(?:(?P<rat>[+-]?\d+(?:/\d+)?)\s*\+\s*)?\((?P<log>[+-]?\d+(?:/\d+)?)\)\*ln2\s*$")


def parse_logvalue(text: str) -> LogValue:
    m = _LOG_RE.match(text)
    if m:
        rat = parse_rational(m.group("rat")) if m.group("rat") else ZERO
        return LogValue(rat, parse_rational(m.group("log")))
    return LogValue(parse_rational(text), 0)


class HalfIntKind(enum.Enum):
    ZERO = "Zero"
    NON_NEG_INTEGER = "NonNegInteger"
    NEG_INTEGER = "NegInteger"
    POSITIVE_HALF = "PositiveHalf"
    NEGATIVE_HALF = "NegativeHalf"


class HalfInt:
    """A value in Z/2, stored as twice the value."""

    __slots__ = ("twice",)

    def __init__(self, twice: int):
        object.__setattr__(self, "twice", int(twice))

    def __setattr__(self, name, value):
        raise AttributeError("HalfInt is immutable")

    def __reduce__(self):
        return (HalfInt, (self.twice,))

    @classmethod
    def of(cls, x) -> "HalfInt":
        if isinstance(x, HalfInt):
            return x
        if isinstance(x, float):
            raise TypeError("floating-point values are not allowed")
        q = mpq(x) * 2
        if q.denominator != 1:
            raise ValueError(f"{x} is not a multiple of 1/2")
        return cls(int(q.numerator))

    @property
    def is_integer(self) -> bool:
        return self.twice % 2 == 0

    def to_rational(self) -> Rational:
        return mpq(self.twice, 2)

    def to_number(self):
        """``int`` for integers, ``mpq`` for half-integers."""
        if self.twice % 2 == 0:
            return self.twice // 2
        return mpq(self.twice, 2)

    def __int__(self):
        if self.twice % 2:
            raise ValueError(f"{self} is not an integer")
        return self.twice // 2

    def _other_twice(self, other):
        if isinstance(other, HalfInt):
            return other.twice
        if isinstance(other, int):
            return 2 * other
        return None

    def __add__(self, other):
        t = self._other_twice(other)
        if t is None:
            return NotImplemented
        return HalfInt(self.twice + t)

    __radd__ = __add__

    def __sub__(self, other):
        t = self._other_twice(other)
        if t is None:
            return NotImplemented
        return HalfInt(self.twice - t)

    def __rsub__(self, other):
        t = self._other_twice(other)
        if t is None:
            return NotImplemented
        return HalfInt(t - self.twice)

    def __neg__(self):
        return HalfInt(-self.twice)

    def __eq__(self, other):
        if isinstance(other, HalfInt):
            return self.twice == other.twice
        if isinstance(other, (int, Rational, Fraction)):
            return self.to_rational() == other
        return NotImplemented

    def __lt__(self, other):
        return self.to_rational() < to_rational(other)

    def __le__(self, other):
        return self.to_rational() <= to_rational(other)

    def __gt__(self, other):
        return self.to_rational() > to_rational(other)

    def __ge__(self, other):
        return self.to_rational() >= to_rational(other)

    def __hash__(self):
        return hash(self.to_rational())

    def __repr__(self):
        return f"HalfInt({render_halfint(self)!r})"

    def __str__(self):
        return render_halfint(self)


def halfint_classify(z) -> HalfIntKind:
    z = HalfInt.of(z)
    if z.twice == 0:
        return HalfIntKind.ZERO
    if z.twice % 2 == 0:
        return HalfIntKind.NON_NEG_INTEGER if z.twice > 0 else HalfIntKind.NEG_INTEGER
    return HalfIntKind.POSITIVE_HALF if z.twice > 0 else HalfIntKind.NEGATIVE_HALF


def render_halfint(z) -> str:
    z = HalfInt.of(z)
    if z.twice % 2 == 0:
        return str(z.twice // 2)
    return f"{z.twice}/2"


def parse_halfint(text: str) -> HalfInt:
    q = parse_rational(text)
    try:
        return HalfInt.of(q)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def as_twice(z) -> int:
    """Doubled value of an int, half-integer rational or HalfInt."""
    if isinstance(z, int):
        return 2 * z
    if isinstance(z, HalfInt):
        return z.twice
    if isinstance(z, float):
        raise TypeError("floating-point values are not allowed")
    q = mpq(z) * 2
    if q.denominator != 1:
        raise ValueError(f"{z} is not a multiple of 1/2")
    return int(q.numerator)


def canonical(x) -> tuple[int, int, int, int]:
    """Integer tuple identifying a LogValue, independent of the rational backend."""
    if isinstance(x, (int, Rational, Fraction)):
        return (int(x.numerator), int(x.denominator), 0, 1)
    return (int(x.rat.numerator), int(x.rat.denominator), int(x.log2.numerator), int(x.log2.denominator))


__all__ = [
    "Rational",
    "ZERO",
    "ONE",
    "mpz",
    "to_rational",
    "rational_add",
    "rational_mul",
    "rational_neg",
    "rational_inv",
    "render_rational",
    "parse_rational",
    "LogValue",
    "logvalue_add",
    "logvalue_scale",
    "logvalue_mul",
    "render_logvalue",
    "parse_logvalue",
    "HalfInt",
    "HalfIntKind",
    "halfint_classify",
    "render_halfint",
    "parse_halfint",
    "as_twice",
    "canonical",
]
