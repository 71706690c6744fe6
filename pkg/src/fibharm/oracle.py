"""Independent reference evaluator used by the audit.

Everything here is deliberately naive and shares no code with the cached
primitives: ``fractions.Fraction`` instead of gmpy2, sequences by plain
iteration (no reflection formulas), half-integer harmonic numbers by walking
the recurrence from H_{-1/2} = -2 ln2, and half-integer binomials as Gamma
ratios Gamma(h+1) = c*sqrt(pi) with c tracked exactly.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .errors import DegreeOverflow, DomainError, HarmonicPole, UnsupportedBinomial, ZeroDenominator


class Ln2Pair:
    """a + b*ln2 with Fraction coefficients."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        for v in (a, b):
            if not isinstance(v, (int, Fraction)):
                raise TypeError(f"oracle value of type {type(v).__name__}")
        self.a = Fraction(a)
        self.b = Fraction(b)

    @staticmethod
    def lift(x):
        if isinstance(x, Ln2Pair):
            return x
        if isinstance(x, (int, Fraction)):
            return Ln2Pair(x, 0)
        return NotImplemented

    def __add__(self, other):
        o = Ln2Pair.lift(other)
        if o is NotImplemented:
            return o
        return Ln2Pair(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return Ln2Pair(-self.a, -self.b)

    def __sub__(self, other):
        o = Ln2Pair.lift(other)
        if o is NotImplemented:
            return o
        return Ln2Pair(self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = Ln2Pair.lift(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = Ln2Pair.lift(other)
        if o is NotImplemented:
            return o
        if self.b and o.b:
            raise DegreeOverflow("ln2 squared in oracle product")
        return Ln2Pair(self.a * o.a, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = Ln2Pair.lift(other)
        if o is NotImplemented:
            return o
        if o.b:
            raise DegreeOverflow("oracle division by a ln2-bearing value")
        if o.a == 0:
            raise ZeroDivisionError("oracle division by zero")
        return Ln2Pair(self.a / o.a, self.b / o.a)

    def __eq__(self, other):
        o = Ln2Pair.lift(other)
        if o is NotImplemented:
            return o
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self):
        return f"Ln2Pair({self.a}, {self.b})"


def _frac(x) -> Fraction:
    """Fraction from int, Fraction, or anything with numerator/denominator."""
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    return Fraction(int(x.numerator), int(x.denominator))


@lru_cache(maxsize=None)
def _gib(g0: int, g1: int, j: int) -> int:
    if j >= 0:
        a, b = g0, g1
        for _ in range(j):
            a, b = b, a + b
        return a
    # walk backwards: G_{i-1} = G_{i+1} - G_i
    a, b = g0, g1  # (G_i, G_{i+1}) with i = 0
    for _ in range(-j):
        a, b = b - a, a
    return a


@lru_cache(maxsize=None)
def _harmonic_int(n: int) -> Fraction:
    total = Fraction(0)
    for j in range(1, n + 1):
        total += Fraction(1, j)
    return total


@lru_cache(maxsize=None)
def _harmonic_half(twice: int) -> Ln2Pair:
    # H_{-1/2} = -2 ln2; H_z = H_{z-1} + 1/z
    z = Fraction(-1, 2)
    h = Ln2Pair(0, -2)
    target = Fraction(twice, 2)
    while z < target:
        z += 1
        h = h + Fraction(1) / z
    while z > target:
        h = h - Fraction(1) / z
        z -= 1
    return h


@lru_cache(maxsize=None)
def _gamma_half_coeff(twice: int) -> Fraction:
    """c with Gamma(h + 1) = c * sqrt(pi), for h = twice/2 a half-integer (not a pole)."""
    h = Fraction(twice, 2)
    c = Fraction(1)  # Gamma(1/2) = sqrt(pi), i.e. h = -1/2
    cur = Fraction(-1, 2)
    while cur < h:
        cur += 1
        c *= cur  # Gamma(cur + 1) = cur * Gamma(cur)
    while cur > h:
        c /= cur  # Gamma(cur) = Gamma(cur + 1) / cur
        cur -= 1
    return c


def _twice(z) -> int:
    f = _frac(z) * 2
    if f.denominator != 1:
        raise ValueError(f"{z} is not a multiple of 1/2")
    return f.numerator


def _binom(x, k) -> Fraction:
    kt = _twice(k)
    x = _frac(x)
    if kt % 2 == 0:
        k = kt // 2
        if k < 0:
            if x.denominator == 1 and x < 0:
                raise UnsupportedBinomial("oracle: binomial with both indices negative integers")
            return Fraction(0)
        out = Fraction(1)
        for i in range(k):
            out = out * (x - i) / (i + 1)
        return out
    xt = _twice(x)
    if xt % 2 == 0:
        raise UnsupportedBinomial("oracle: integer upper, half-integer lower")
    d = (xt - kt) // 2  # x - k, an integer
    if d < 0:
        return Fraction(0)
    fact = 1
    for i in range(2, d + 1):
        fact *= i
    return _gamma_half_coeff(xt) / (_gamma_half_coeff(kt) * fact)


class OracleContext:
    name = "oracle"
    zero = Fraction(0)
    ln2 = Ln2Pair(0, 1)

    def __init__(self, seed=None):
        self.seed = seed

    @staticmethod
    def num(v):
        f = _frac(v)
        return f.numerator if f.denominator == 1 else f

    @staticmethod
    def F(j: int) -> int:
        return _gib(0, 1, j)

    @staticmethod
    def L(j: int) -> int:
        return _gib(2, 1, j)

    def G(self, j: int) -> int:
        return _gib(self.seed.g0, self.seed.g1, j)

    @staticmethod
    def H(z):
        t = _twice(z)
        if t % 2:
            return _harmonic_half(t)
        if t < 0:
            raise HarmonicPole(f"oracle: H at {t // 2}")
        return _harmonic_int(t // 2)

    @staticmethod
    def O(n: int) -> Fraction:
        if n < 0:
            raise DomainError(f"oracle: odd harmonic at {n}")
        total = Fraction(0)
        for j in range(1, n + 1):
            total += Fraction(1, 2 * j - 1)
        return total

    @staticmethod
    def C(x, k) -> Fraction:
        return _binom(x, k)

    @staticmethod
    def Ci(x, k) -> Fraction:
        b = _binom(x, k)
        if b == 0:
            raise ZeroDenominator(f"oracle: vanishing binomial({x}, {k})")
        return 1 / b

    @staticmethod
    def q(a, b):
        if b == 0:
            raise ZeroDenominator("oracle: explicit denominator vanishes")
        return a / _frac(b)

    @staticmethod
    def pow(base, e: int):
        base = _frac(base)
        if e < 0 and base == 0:
            raise ZeroDenominator("oracle: zero to a negative power")
        return base**e

    def sum(self, terms):
        total = Fraction(0)
        for t in terms:
            total = total + t
        return total


def oracle_canonical(v) -> tuple:
    """Same integer tuple as ``exact.canonical`` for oracle values."""
    if isinstance(v, Ln2Pair):
        return (v.a.numerator, v.a.denominator, v.b.numerator, v.b.denominator)
    if isinstance(v, (int, Fraction)):
        f = Fraction(v)
        return (f.numerator, f.denominator, 0, 1)
    raise TypeError(f"oracle produced a {type(v).__name__}")
