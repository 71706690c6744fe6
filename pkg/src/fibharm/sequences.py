"""Fibonacci, Lucas and gibonacci numbers at every integer index.

Values come from cached forward/backward iteration of the recurrence; no
closed forms are used.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .errors import DomainError


@dataclass(frozen=True, order=True)
class GibonacciSeed:
    g0: int
    g1: int

    def __post_init__(self):
        if self.g0 == 0 and self.g1 == 0:
            raise DomainError("gibonacci seed must not be (0, 0)")

    def __str__(self):
        return f"{self.g0}:{self.g1}"


FIBONACCI = GibonacciSeed(0, 1)
LUCAS = GibonacciSeed(2, 1)


class SequenceCache:
    """Forward table holds G_0, G_1, ...; backward table holds G_{-1}, G_{-2}, ..."""

    def __init__(self, seed: GibonacciSeed):
        self.seed = seed
        self._fwd = [seed.g0, seed.g1]
        self._bwd: list[int] = []
        self._lock = threading.Lock()

    def __call__(self, j: int) -> int:
        if j >= 0:
            fwd = self._fwd
            if j < len(fwd):
                return fwd[j]
            with self._lock:
                while len(fwd) <= j:
                    fwd.append(fwd[-1] + fwd[-2])
            return fwd[j]
        i = -j - 1
        bwd = self._bwd
        if i < len(bwd):
            return bwd[i]
        with self._lock:
            while len(bwd) <= i:
                # G_{m-2} = G_m - G_{m-1}
                if len(bwd) == 0:
                    nxt = self._fwd[1] - self._fwd[0]
                elif len(bwd) == 1:
                    nxt = self._fwd[0] - bwd[0]
                else:
                    nxt = bwd[-2] - bwd[-1]
                bwd.append(nxt)
        return bwd[i]


_caches: dict[GibonacciSeed, SequenceCache] = {}
_caches_lock = threading.Lock()


def cache_for(seed) -> SequenceCache:
    if not isinstance(seed, GibonacciSeed):
        seed = GibonacciSeed(*seed)
    cache = _caches.get(seed)
    if cache is None:
        with _caches_lock:
            cache = _caches.setdefault(seed, SequenceCache(seed))
    return cache


_fib = cache_for(FIBONACCI)
_luc = cache_for(LUCAS)


def fib(j: int) -> int:
    if j >= 0:
        return _fib(j)
    # F_{-j} = (-1)^{j-1} F_j
    v = _fib(-j)
    return v if (-j) % 2 == 1 else -v


def lucas(j: int) -> int:
    if j >= 0:
        return _luc(j)
    v = _luc(-j)
    return v if (-j) % 2 == 0 else -v


def gib(seed, j: int) -> int:
    return cache_for(seed)(j)


def gib_product(seed, start: int, count: int) -> int:
    """Product of ``count`` consecutive gibonacci values starting at index ``start``."""
    if count < 0:
        raise DomainError("count must be non-negative")
    g = cache_for(seed)
    out = 1
    for j in range(start, start + count):
        out *= g(j)
    return out
