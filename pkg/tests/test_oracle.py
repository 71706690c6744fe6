from fractions import Fraction

import pytest
from gmpy2 import mpq

from fibharm.errors import DegreeOverflow, HarmonicPole, UnsupportedBinomial, ZeroDenominator
from fibharm.exact import canonical
from fibharm.oracle import Ln2Pair, OracleContext, oracle_canonical
from fibharm.registry.context import ExactContext
from fibharm.sequences import GibonacciSeed

SEED = GibonacciSeed(-2, 5)


def test_ln2_pair_arithmetic():
    a = Ln2Pair(1, 2)
    assert a + 1 == Ln2Pair(2, 2)
    assert 3 * a == Ln2Pair(3, 6)
    assert (a - a) == 0
    with pytest.raises(DegreeOverflow):
        a * a
    with pytest.raises(TypeError):
        Ln2Pair(0.5)


def test_oracle_primitives_match_exact_context():
    ex, orc = ExactContext(SEED), OracleContext(SEED)
    for j in range(-20, 30):
        assert ex.F(j) == orc.F(j) and ex.L(j) == orc.L(j) and ex.G(j) == orc.G(j)
    for t in range(-9, 30):
        if t % 2 == 0 and t < 0:
            continue
        z_ex = t // 2 if t % 2 == 0 else mpq(t, 2)
        assert canonical(ex.H(z_ex)) == oracle_canonical(orc.H(Fraction(t, 2)))
    for n in range(15):
        assert canonical(ex.O(n)) == oracle_canonical(orc.O(n))
    for x in range(-12, 14):
        for k in range(-6, 10):
            xe = x // 2 if x % 2 == 0 else mpq(x, 2)
            ke = k // 2 if k % 2 == 0 else mpq(k, 2)
            try:
                ours = ex.C(xe, ke)
            except UnsupportedBinomial:
                with pytest.raises(UnsupportedBinomial):
                    orc.C(Fraction(x, 2), Fraction(k, 2))
                continue
            assert canonical(ours) == oracle_canonical(orc.C(Fraction(x, 2), Fraction(k, 2)))


def test_oracle_poles():
    orc = OracleContext(SEED)
    with pytest.raises(HarmonicPole):
        orc.H(-3)
    with pytest.raises(ZeroDenominator):
        orc.Ci(2, 3)
    with pytest.raises(ZeroDenominator):
        orc.q(1, 0)
