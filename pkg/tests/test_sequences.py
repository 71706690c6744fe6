import pytest
from hypothesis import given, strategies as st

from fibharm.errors import DomainError
from fibharm.oracle import _gib
from fibharm.sequences import FIBONACCI, LUCAS, GibonacciSeed, fib, gib, gib_product, lucas

SEEDS = [GibonacciSeed(0, 1), GibonacciSeed(2, 1), GibonacciSeed(1, 1), GibonacciSeed(3, -1), GibonacciSeed(-2, 5)]


def test_fib_values():
    assert fib(0) == 0
    assert fib(10) == 55
    assert fib(-3) == 2


def test_lucas_values():
    assert lucas(0) == 2
    assert lucas(5) == 11
    assert lucas(-4) == 7


def test_gib_values():
    assert gib(FIBONACCI, 7) == 13
    assert gib(LUCAS, 5) == 11
    assert gib(GibonacciSeed(1, 3), -1) == 2


def test_gib_product():
    assert gib_product(FIBONACCI, 1, 4) == 6
    assert gib_product(GibonacciSeed(3, -1), 5, 0) == 1
    assert gib_product(LUCAS, 0, 2) == 2
    with pytest.raises(DomainError):
        gib_product(LUCAS, 0, -1)


def test_zero_seed_rejected():
    with pytest.raises(DomainError):
        GibonacciSeed(0, 0)


@pytest.mark.parametrize("seed", SEEDS, ids=str)
def test_recurrence_both_directions(seed):
    for j in range(-50, 201):
        assert gib(seed, j) == gib(seed, j - 1) + gib(seed, j - 2)


@pytest.mark.parametrize("seed", SEEDS, ids=str)
def test_against_naive_iteration(seed):
    for j in range(-40, 120):
        assert gib(seed, j) == _gib(seed.g0, seed.g1, j)


def test_reflection():
    for j in range(0, 101):
        assert fib(-j) == (-1) ** (j - 1) * fib(j) if j else fib(0) == 0
        assert lucas(-j) == (-1) ** j * lucas(j)


def test_named_seeds_match():
    for j in range(-30, 60):
        assert gib(FIBONACCI, j) == fib(j)
        assert gib(LUCAS, j) == lucas(j)


def test_howard_identities():
    for a in range(21):
        for b in range(21):
            assert fib(a + b) ** 2 - fib(a - b) ** 2 == fib(2 * a) * fib(2 * b)
            assert lucas(a + b) ** 2 - lucas(a - b) ** 2 == 5 * fib(2 * a) * fib(2 * b)


def test_howard_three_index():
    for a in range(13):
        for b in range(13):
            for c in range(13):
                lhs = fib(a) * fib(a + 2 * b + c)
                rhs = fib(a + b + c) * fib(a + b) + (-1) ** (a + 1) * fib(b) * fib(b + c)
                assert lhs == rhs


@given(st.integers(-50, 50), st.integers(-50, 50).filter(lambda v: v != 0), st.integers(-300, 300))
def test_generic_seed_linearity(g0, g1, j):
    # G_j = G_0 F_{j-1} + G_1 F_j
    assert gib(GibonacciSeed(g0, g1), j) == g0 * fib(j - 1) + g1 * fib(j)
