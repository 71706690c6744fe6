import random

import pytest
from gmpy2 import mpq

from fibharm.errors import DomainError, PairMismatch
from fibharm.exact import LogValue
from fibharm.report import Outcome
from fibharm.sequences import GibonacciSeed, fib, gib, lucas
from fibharm.transforms import (
    FiniteSequence,
    abel_check,
    binomial_transform,
    boyad1_check,
    boyad2_check,
    gouldqu_check,
    random_rational_sequence,
)


def test_abel_examples():
    ones = FiniteSequence.of([1] * 5, 1)
    assert abel_check(ones, ones, 3).equal
    a = FiniteSequence.from_function(fib, 1, 5)
    r = abel_check(a, ones, 4)
    assert r.equal and r.lhs == LogValue(4)


def test_abel_too_short():
    s = FiniteSequence.of([1, 2], 1)
    with pytest.raises(DomainError):
        abel_check(s, s, 3)


def test_abel_random_pairs():
    rng = random.Random(20240601)
    for _ in range(200):
        n = rng.randint(0, 40)
        a = random_rational_sequence(rng, n + 1, 1)
        b = random_rational_sequence(rng, n + 1, 1)
        assert abel_check(a, b, n, "Difference").equal
        assert abel_check(a, b, n, "Sum").equal


def test_transform_of_constant():
    sigma = binomial_transform(FiniteSequence.of([1] * 6))
    assert sigma.values == tuple(LogValue(v) for v in (1, 0, 0, 0, 0, 0))


def test_involution():
    rng = random.Random(7)
    for _ in range(100):
        s = random_rational_sequence(rng, rng.randint(1, 26))
        assert binomial_transform(binomial_transform(s)) == s


def test_scaled_gibonacci_pair():
    # sigma_n = (-1)^r (G_0 L_{tn-r} - G_{tn-r}) / L_t^n
    seed, t, r = GibonacciSeed(0, 1), 1, 0
    s = FiniteSequence.from_function(lambda k: mpq(fib(t * k + r), lucas(t) ** k), 0, 3)
    sigma = binomial_transform(s)
    assert sigma[3] == LogValue(-2)
    for n in range(4):
        expect = mpq((-1) ** r * (seed.g0 * lucas(t * n - r) - gib(seed, t * n - r)), lucas(t) ** n)
        assert sigma[n] == LogValue(expect)


def test_boyad_checks_on_pairs():
    rng = random.Random(3)
    for _ in range(20):
        n = rng.randint(0, 12)
        s = random_rational_sequence(rng, n + 1)
        sigma = binomial_transform(s)
        assert boyad1_check(s, sigma, n).equal
        assert boyad2_check(s, sigma, GibonacciSeed(0, 1), n).equal


def test_boyad2_needs_zero_g0():
    s = FiniteSequence.of([1, 2, 3])
    sigma = binomial_transform(s)
    assert boyad2_check(s, sigma, (2, 1), 2).outcome is Outcome.UNEQUAL


def test_pair_mismatch():
    s = FiniteSequence.of([1, 2, 3])
    with pytest.raises(PairMismatch):
        boyad1_check(s, s, 2)


@pytest.mark.parametrize("m,r", [(0, 0), (2, 3), (mpq(-1, 2), 1), (1, mpq(1, 2)), (mpq(-3, 2), 2)])
def test_gouldqu_on_pairs(m, r):
    rng = random.Random(11)
    for _ in range(5):
        n = rng.randint(0, 8)
        t = random_rational_sequence(rng, n + 1)
        rep = gouldqu_check(t, binomial_transform(t), n, m, r)
        assert rep.outcome is not Outcome.UNEQUAL


def test_gouldqu_domain():
    t = FiniteSequence.of([1, 1])
    with pytest.raises(DomainError):
        gouldqu_check(t, binomial_transform(t), 1, -1, 0)
