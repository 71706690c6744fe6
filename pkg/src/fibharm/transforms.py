"""Abel partial summation and binomial-transform checks over exact sequences."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Sequence

from gmpy2 import mpq

from .errors import DomainError, PairMismatch, Pole
from .exact import HalfInt, LogValue, to_rational
from .harmonic import binom_inv, harmonic_int
from .report import CheckReport, compare, skipped
from .sequences import GibonacciSeed, cache_for


@dataclass(frozen=True)
class FiniteSequence:
    """Dense values ``x_start, x_{start+1}, ...``."""

    values: tuple
    start: int = 0

    def __post_init__(self):
        if len(self.values) < 1:
            raise DomainError("a FiniteSequence needs at least one value")
        object.__setattr__(self, "values", tuple(LogValue.coerce(v) for v in self.values))

    @classmethod
    def of(cls, values: Sequence, start: int = 0) -> "FiniteSequence":
        return cls(tuple(values), start)

    @classmethod
    def from_function(cls, f, start: int, stop: int) -> "FiniteSequence":
        """Values f(j) for j in [start, stop]."""
        return cls(tuple(f(j) for j in range(start, stop + 1)), start)

    @property
    def stop(self) -> int:
        return self.start + len(self.values) - 1

    def covers(self, lo: int, hi: int) -> bool:
        return self.start <= lo and hi <= self.stop

    def __getitem__(self, j: int) -> LogValue:
        i = j - self.start
        if i < 0 or i >= len(self.values):
            raise IndexError(f"index {j} outside [{self.start}, {self.stop}]")
        return self.values[i]

    def __len__(self):
        return len(self.values)


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def abel_check(a: FiniteSequence, b: FiniteSequence, n: int, variant: str = "Difference") -> CheckReport:
    """Summation by parts on [1, n].

    Difference: sum b_k (a_{k+1} - a_k) = sum a_{k+1} (b_k - b_{k+1}) + a_{n+1} b_{n+1} - a_1 b_1
    Sum:        sum b_k (a_{k+1} + a_k) = sum a_{k+1} (b_k + b_{k+1}) - a_{n+1} b_{n+1} + a_1 b_1
    """
    if not (a.covers(1, n + 1) and b.covers(1, n + 1)):
        raise DomainError(f"sequences must be defined on [1, {n + 1}]")
    ks = range(1, n + 1)
    if variant == "Difference":
        lhs = sum((b[k] * (a[k + 1] - a[k]) for k in ks), LogValue())
        rhs = sum((a[k + 1] * (b[k] - b[k + 1]) for k in ks), LogValue())
        rhs = rhs + a[n + 1] * b[n + 1] - a[1] * b[1]
    elif variant == "Sum":
        lhs = sum((b[k] * (a[k + 1] + a[k]) for k in ks), LogValue())
        rhs = sum((a[k + 1] * (b[k] + b[k + 1]) for k in ks), LogValue())
        rhs = rhs - a[n + 1] * b[n + 1] + a[1] * b[1]
    else:
        raise ValueError(f"unknown Abel variant {variant!r}")
    return compare(f"abel-{variant.lower()}", (("n", n),), lhs, rhs)


def binomial_transform(s: FiniteSequence) -> FiniteSequence:
    """sigma_n = sum_k (-1)^k C(n,k) s_k on the same index range [0, N]."""
    if s.start != 0:
        raise DomainError("binomial transform needs a sequence starting at index 0")
    out = []
    for n in range(len(s)):
        acc = LogValue()
        for k in range(n + 1):
            acc = acc + s[k] * (_sign(k) * math.comb(n, k))
        out.append(acc)
    return FiniteSequence(tuple(out), 0)


def _check_pair(s: FiniteSequence, sigma: FiniteSequence, n: int) -> None:
    if not (s.covers(0, n) and sigma.covers(0, n)) or s.start != 0 or sigma.start != 0:
        raise PairMismatch(f"pair must be defined on [0, {n}]")
    head = FiniteSequence(s.values[: n + 1], 0)
    if binomial_transform(head).values != sigma.values[: n + 1]:
        raise PairMismatch("sequences are not a binomial-transform pair")


def boyad1_check(s: FiniteSequence, sigma: FiniteSequence, n: int) -> CheckReport:
    """sum (-1)^k C(n,k) H_k s_k = H_n sigma_n - sum_{k<n} sigma_k/(n-k)."""
    _check_pair(s, sigma, n)
    lhs = LogValue()
    for k in range(n + 1):
        lhs = lhs + s[k] * (_sign(k) * math.comb(n, k) * harmonic_int(k))
    rhs = sigma[n] * harmonic_int(n)
    for k in range(n):
        rhs = rhs - sigma[k] / (n - k)
    return compare("boyad1", (("n", n),), lhs, rhs)


def boyad2_check(s: FiniteSequence, sigma: FiniteSequence, g_seed, n: int) -> CheckReport:
    """sum (-1)^{k+1} C(n,k) G_k s_k = sum (-1)^k C(n,k) G_{n-2k} sigma_k."""
    _check_pair(s, sigma, n)
    seed = g_seed if isinstance(g_seed, GibonacciSeed) else GibonacciSeed(*g_seed)
    G = cache_for(seed)
    lhs = LogValue()
    rhs = LogValue()
    for k in range(n + 1):
        c = math.comb(n, k)
        lhs = lhs + s[k] * (-_sign(k) * c * G(k))
        rhs = rhs + sigma[k] * (_sign(k) * c * G(n - 2 * k))
    return compare("boyad2", (("n", n), ("seed", seed)), lhs, rhs)


def gouldqu_check(t: FiniteSequence, tau: FiniteSequence, n: int, m, r) -> CheckReport:
    """sum (-1)^k C(n,k) t_k / C(r+m+n-k+1, m+1)
    = (m+1)/(r+1) sum (-1)^{n-k} C(n,k) tau_k / C(r+m+n-k+1, r+1)."""
    _check_pair(t, tau, n)
    m = HalfInt.of(m)
    r = HalfInt.of(r)
    for name, v in (("m", m), ("r", r)):
        if v.is_integer and v.twice < 0:
            raise DomainError(f"{name} must not be a negative integer")
    a = (("n", n), ("m", m), ("r", r))
    mq, rq = to_rational(m), to_rational(r)
    try:
        lhs = LogValue()
        rhs = LogValue()
        for k in range(n + 1):
            c = math.comb(n, k)
            top = rq + mq + n - k + 1
            lhs = lhs + t[k] * (_sign(k) * c * binom_inv(top, mq + 1))
            rhs = rhs + tau[k] * (_sign(n - k) * c * binom_inv(top, rq + 1))
        rhs = rhs * ((mq + 1) / (rq + 1))
    except Pole as exc:
        return skipped("gouldqu", a, exc.reason)
    return compare("gouldqu", a, lhs, rhs)


def random_rational_sequence(rng: random.Random, length: int, start: int = 0) -> FiniteSequence:
    """Entries p/q with p in [-9, 9], q in [1, 9]."""
    vals = [mpq(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(length)]
    return FiniteSequence(tuple(vals), start)
