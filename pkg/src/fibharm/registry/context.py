"""Primitive bundle that identity evaluators are written against.

Evaluators receive ``(p, X)``: ``p`` holds the parameter values and ``X`` the
primitives. The registry uses :class:`ExactContext`; the audit re-runs the
same evaluators against the independent primitives in :mod:`fibharm.oracle`.
"""

from __future__ import annotations

from gmpy2 import mpq

from ..errors import ZeroDenominator
from ..exact import LogValue, as_twice
from ..harmonic import binom_any, binom_inv, harmonic_half, harmonic_int, odd_harmonic
from ..sequences import cache_for, fib, lucas


def sg(e: int) -> int:
    """(-1)**e for integer e."""
    return -1 if e & 1 else 1


class ExactContext:
    """Cached gmpy2-backed primitives."""

    name = "exact"
    zero = mpq(0)
    ln2 = LogValue(0, 1)

    def __init__(self, seed=None):
        self.seed = seed
        self._g = cache_for(seed) if seed is not None else None

    def with_seed(self, seed) -> "ExactContext":
        return ExactContext(seed)

    @staticmethod
    def num(v):
        """Parameter value as an exact number of this backend."""
        if isinstance(v, int):
            return v
        q = mpq(v)
        return int(q.numerator) if q.denominator == 1 else q

    F = staticmethod(fib)
    L = staticmethod(lucas)

    def G(self, j: int) -> int:
        return self._g(j)

    @staticmethod
    def H(z):
        if isinstance(z, int):
            return harmonic_int(z)
        twice = as_twice(z)
        if twice & 1:
            return harmonic_half(twice)
        return harmonic_int(twice // 2)

    O = staticmethod(odd_harmonic)
    C = staticmethod(binom_any)
    Ci = staticmethod(binom_inv)

    @staticmethod
    def q(a, b):
        if b == 0:
            raise ZeroDenominator("explicit denominator vanishes")
        if isinstance(a, int) and isinstance(b, int):
            return mpq(a, b)
        return a / b

    @staticmethod
    def pow(base, e: int):
        if e >= 0:
            return mpq(base) ** e
        if base == 0:
            raise ZeroDenominator("zero to a negative power")
        return 1 / mpq(base) ** (-e)

    def sum(self, terms):
        return sum(terms, self.zero)

    @staticmethod
    def is_exact(v) -> bool:
        return isinstance(v, (int, LogValue)) or type(v) is type(mpq()) or type(v).__name__ == "mpz"

    @staticmethod
    def canonical(v):
        from ..exact import canonical

        return canonical(v)
