"""Default parameter grids and schema shorthands used by the catalog."""

from __future__ import annotations

from fractions import Fraction

from .core import DEFAULT_SEEDS, HALFINT, INT, RATIONAL, SEED, ParamSchema, ParamSpec

N_MAX = 24
N0 = range(0, N_MAX + 1)
N1 = range(1, N_MAX + 1)
R_SHIFT = range(-3, 6)
S0 = range(0, 5)
S1 = range(1, 5)
T0 = range(0, 5)
T_MULT = range(-3, 4)  # multiplier t in G_{tk+r}
HALF = Fraction(1, 2)


def n0(doc="n>=0"):
    return ParamSpec("n", INT, N0, doc)


def n1(doc="n>=1"):
    return ParamSpec("n", INT, N1, doc)


def n_upto(hi: int, lo: int = 0):
    return ParamSpec("n", INT, range(lo, hi + 1), f"n>={lo}")


def r_shift():
    return ParamSpec("r", INT, R_SHIFT, "integer")


def s0():
    return ParamSpec("s", INT, S0, "s>=0")


def s1():
    return ParamSpec("s", INT, S1, "s>=1")


def t0(name="t"):
    return ParamSpec(name, INT, T0, f"{name}>=0")


def t_mult():
    return ParamSpec("t", INT, T_MULT, "integer")


def seed():
    return ParamSpec("seed", SEED, DEFAULT_SEEDS, "gibonacci seed")


def ints(name, values, doc=""):
    return ParamSpec(name, INT, values, doc)


def halfints(name, values, doc=""):
    return ParamSpec(name, HALFINT, values, doc)


def rationals(name, values, doc=""):
    return ParamSpec(name, RATIONAL, values, doc)


def schema(*params, constraint=None, doc=""):
    return ParamSchema(tuple(params), constraint, doc)


def half_range(lo_twice: int, hi_twice: int):
    """Half-integers p/2 for odd p in [lo_twice, hi_twice]."""
    return [Fraction(p, 2) for p in range(lo_twice, hi_twice + 1) if p % 2]
