"""Summation-by-parts identities: Fibonacci shifts, reciprocal products,
gibonacci products, and the binomial-coefficient family in r."""

from __future__ import annotations

from .context import sg
from .core import IdentityEntry, Reading
from .grids import (
    HALF,
    half_range,
    halfints,
    ints,
    n0,
    n1,
    r_shift,
    rationals,
    s0,
    s1,
    schema,
    seed,
    t0,
)

ABEL_FIB = "ABEL-FIB"
ABEL_COMB = "ABEL-COMB"


def _ks(p):
    return range(1, p.n + 1)


# --- Fibonacci shifts ---------------------------------------------------------


def shift_binom_lhs(p, X):
    r, s, t = p.r, p.s, p.t
    return X.sum(X.F(k + r + 2) * X.Ci(t + k + s, t + 1) for k in _ks(p))


def shift_binom_rhs(p, X):
    n, r, s, t = p.n, p.r, p.s, p.t
    a = X.sum(X.F(k + r + 1) * X.Ci(t + k + s, t + 1) for k in _ks(p))
    b = X.sum(X.F(k + r + 1) * X.Ci(t + k + s + 1, t + 1) for k in _ks(p))
    return a - X.F(n + r + 1) * X.Ci(t + n + s + 1, t + 1) + b + X.F(r + 1) * X.Ci(s + t + 1, t + 1)


def shift_simple_lhs(p, X):
    return X.sum(X.q(X.F(k + p.r + 2), k + p.s) for k in _ks(p))


def _shift_simple_rhs(coef):
    def rhs(p, X):
        n, r, s = p.n, p.r, p.s
        a = X.sum(X.q(coef(k, s) * X.F(k + r + 1), (k + s) * (k + s + 1)) for k in _ks(p))
        return a + X.q(X.F(r + 1), s + 1) - X.q(X.F(n + r + 1), n + s + 1)

    return rhs


shift_simple_rhs = _shift_simple_rhs(lambda k, s: 2 * k + 3)
shift_simple_rhs_general = _shift_simple_rhs(lambda k, s: 2 * k + 2 * s + 1)


def harm_shift_lhs(p, X):
    r, s, t = p.r, p.s, p.t
    return X.sum(
        (X.H(t) - X.H(k + t + s - 1)) * X.Ci(t + k + s - 1, t + 1) * X.F(k + r - 1) for k in _ks(p)
    )


def harm_shift_rhs(p, X):
    n, r, s, t = p.n, p.r, p.s, p.t
    a = X.sum((X.H(t) - X.H(k + t + s - 1)) * X.Ci(t + k + s - 1, t + 1) * X.F(k + r + 1) for k in _ks(p))
    b = X.sum((X.H(t) - X.H(k + t + s)) * X.Ci(t + k + s, t + 1) * X.F(k + r + 1) for k in _ks(p))
    c = (X.H(t) - X.H(n + t + s)) * X.Ci(n + t + s, t + 1) * X.F(n + r + 1)
    d = (X.H(t) - X.H(s + t)) * X.Ci(t + s, t + 1) * X.F(r + 1)
    return a - b + c - d


def prodFF_H_lhs(p, X):
    return X.sum(X.q(X.H(k), k) * X.F(k - 2) * X.F(k + 1) for k in _ks(p))


def prodFF_H_rhs(p, X):
    n = p.n
    a = X.sum(X.q((X.H(k + 1) - 1) * X.F(k) ** 2, k * (k + 1)) for k in range(1, n))
    return a + X.q(X.H(n) * X.F(n) ** 2, n)


def prodFF_O_lhs(p, X):
    return X.sum(
        X.q(X.pow(2, 2 * k) * X.O(k), k * X.C(2 * k, k)) * X.F(k - 2) * X.F(k + 1) for k in _ks(p)
    )


def prodFF_O_rhs(p, X):
    n = p.n
    a = X.sum(
        X.q(X.pow(2, 2 * k) * (X.O(k + 1) - 1), k * (k + 1) * X.C(2 * (k + 1), k + 1)) * X.F(k) ** 2
        for k in range(1, n)
    )
    return 2 * a + X.q(X.pow(2, 2 * n) * X.O(n), n * X.C(2 * n, n)) * X.F(n) ** 2


def prodFF_gen_lhs(p, X):
    r, s, t = p.r, p.s, p.t
    return X.sum(
        (X.H(k + s + t) - X.H(t)) * X.Ci(k + s + t, t + 1) * X.F(k + r - 1) * X.F(k + r + 2) for k in _ks(p)
    )


def prodFF_gen_rhs(p, X):
    n, r, s, t = p.n, p.r, p.s, p.t
    a = X.sum((X.H(k + s + t) - X.H(t + 1)) * X.Ci(k + s + t, t + 2) * X.F(k + r) ** 2 for k in _ks(p))
    b = (X.H(s + t) - X.H(t)) * X.Ci(s + t, t + 1) * X.F(r + 1) ** 2
    c = (X.H(n + s + t) - X.H(t)) * X.Ci(n + s + t, t + 1) * X.F(n + r + 1) ** 2
    return X.q(t + 1, t + 2) * a - b + c


def fib4_sq_lhs(p, X):
    r, s, t = p.r, p.s, p.t
    return X.sum(X.F(4 * (k + r) + 2) * X.Ci(k + t + s - 1, t + 1) for k in _ks(p))


def fib4_sq_rhs(p, X):
    n, r, s, t = p.n, p.r, p.s, p.t
    a = X.sum(X.F(2 * (k + r) + 2) ** 2 * X.Ci(k + t + s, t + 2) for k in _ks(p))
    b = X.F(2 * (n + r) + 2) ** 2 * X.Ci(n + t + s, t + 1)
    c = X.F(2 * (r + 1)) ** 2 * X.Ci(t + s, t + 1)
    return X.q(t + 1, t + 2) * a + b - c


def fib4_sq_simple_lhs(p, X):
    return X.sum(X.q(X.F(4 * (k + p.r) + 2), k + p.s - 1) for k in _ks(p))


def fib4_sq_simple_rhs(p, X):
    n, r, s = p.n, p.r, p.s
    a = X.sum(X.q(X.F(2 * (k + r) + 2) ** 2, (k + s) * (k + s - 1)) for k in _ks(p))
    return a + X.q(X.F(2 * (n + r) + 2) ** 2, n + s) - X.q(X.F(2 * (r + 1)) ** 2, s)


def fib4_sq_H_lhs(p, X):
    r, s, t = p.r, p.s, p.t
    return X.sum(
        (X.H(t) - X.H(k + t + s - 1)) * X.Ci(k + t + s - 1, t + 1) * X.F(4 * (k + r) + 2) for k in _ks(p)
    )


def fib4_sq_H_rhs(p, X):
    n, r, s, t = p.n, p.r, p.s, p.t
    a = X.sum(
        (X.H(t + 1) - X.H(k + t + s)) * X.Ci(k + t + s, t + 2) * X.F(2 * (k + r) + 2) ** 2 for k in _ks(p)
    )
    b = (X.H(t) - X.H(n + t + s)) * X.Ci(n + t + s, t + 1) * X.F(2 * (n + r) + 2) ** 2
    c = (X.H(t) - X.H(t + s)) * X.Ci(t + s, t + 1) * X.F(2 * (r + 1)) ** 2
    return X.q(t + 1, t + 2) * a + b - c


def fib4_sq_H_simple_lhs(p, X):
    r, s = p.r, p.s
    return X.sum(X.q(X.H(k + s - 1) * X.F(4 * (k + r) + 2), k + s - 1) for k in _ks(p))


def fib4_sq_H_simple_rhs(p, X):
    n, r, s = p.n, p.r, p.s
    a = X.sum(X.q((X.H(k + s) - 1) * X.F(2 * (k + r) + 2) ** 2, (k + s) * (k + s - 1)) for k in _ks(p))
    b = X.q(X.H(n + s) * X.F(2 * (n + r) + 2) ** 2, n + s)
    c = X.q(X.H(s) * X.F(2 * (r + 1)) ** 2, s)
    return a + b - c


# --- reciprocal products ------------------------------------------------------


def rec_FF_lhs(p, X):
    r, s = p.r, p.s
    return X.sum(X.q(sg(r * k) * X.H(k + s - 1), X.F(r * k) * X.F(r * (k + 1))) for k in _ks(p))


def rec_FF_rhs(p, X):
    n, r, s = p.n, p.r, p.s
    a = X.sum(X.q(X.F(r * (k + 2)), X.F(r * (k + 1)) * (k + s)) for k in _ks(p))
    inner = a - X.q(X.F(r * (n + 2)) * X.H(n + s), X.F(r * (n + 1))) + X.L(r) * X.H(s)
    return X.q(inner, X.F(r) ** 2)


def rec_FF_part_lhs(p, X):
    return X.sum(X.q(sg(k) * X.H(k), X.F(k) * X.F(k + 1)) for k in _ks(p))


def rec_FF_part_rhs(p, X):
    n = p.n
    a = X.sum(X.q(X.F(k), X.F(k + 1) * (k + 1)) for k in _ks(p))
    return a - X.q(X.F(n) * X.H(n + 1), X.F(n + 1))


def rec_FL_rhs(p, X):
    n, r, s = p.n, p.r, p.s
    a = X.sum(X.q(X.L(r * (k + 1)), X.F(r * (k + 1)) * (k + s)) for k in _ks(p))
    inner = a - X.q(X.L(r * (n + 1)) * X.H(n + s), X.F(r * (n + 1))) + X.q(X.L(r) * X.H(s), X.F(r))
    return X.q(inner, 2 * X.F(r))


def rec_FL_cor_lhs(p, X):
    r, s = p.r, p.s
    return X.sum(X.q(X.L(r * (k + 1)), X.F(r * (k + 1)) * (k + s)) for k in _ks(p))


def rec_FL_cor_rhs(p, X):
    n, r, s = p.n, p.r, p.s
    a = X.sum(X.q(X.F(r * (k + 2)), X.F(r * (k + 1)) * (k + s)) for k in _ks(p))
    mid = (X.L(r * (n + 1)) - X.q(2 * X.F(r * (n + 2)), X.F(r))) * X.q(X.H(n + s), X.F(r * (n + 1)))
    return X.q(2, X.F(r)) * a + mid + X.q(X.L(r) * X.H(s), X.F(r))


def rec_odd_lhs(p, X):
    r, s = p.r, p.s
    return X.sum(
        X.q(X.F(r * (2 * k + 1)) * X.H(k + s - 1), X.F(2 * r * k) * X.F(2 * r * (k + 1))) for k in _ks(p)
    )


def rec_odd_rhs(p, X):
    n, r, s = p.n, p.r, p.s
    a = X.sum(X.q(1, X.F(2 * r * (k + 1)) * (k + s)) for k in _ks(p))
    inner = a - X.q(X.H(n + s), X.F(2 * r * (n + 1))) + X.q(X.H(s), X.F(2 * r))
    return X.q(inner, X.L(r))


def rec_odd_part_lhs(p, X):
    return X.sum(X.q(X.F(2 * k + 1) * X.H(k), X.F(2 * k) * X.F(2 * k + 2)) for k in _ks(p))


def rec_odd_part_rhs(p, X):
    n = p.n
    a = X.sum(X.q(1, X.F(2 * k + 2) * (k + 1)) for k in _ks(p))
    return a - X.q(X.H(n + 1), X.F(2 * n + 2)) + 1


def rec_sq_lhs(p, X):
    r, s = p.r, p.s
    return X.sum(
        X.q(X.F(r * (2 * k + 1)) * X.H(k + s - 1), X.F(r * k) ** 2 * X.F(r * (k + 1)) ** 2) for k in _ks(p)
    )


def rec_sq_rhs(p, X):
    n, r, s = p.n, p.r, p.s
    a = X.sum(X.q(1, X.F(r * (k + 1)) ** 2 * (k + s)) for k in _ks(p))
    inner = a - X.q(X.H(n + s), X.F(r * (n + 1)) ** 2) + X.q(X.H(s), X.F(r) ** 2)
    return X.q(inner, X.F(r))


def rec_sq_part_lhs(p, X):
    return X.sum(X.q(X.F(4 * k + 2) * X.H(k), X.F(2 * k) ** 2 * X.F(2 * k + 2) ** 2) for k in _ks(p))


def rec_sq_part_rhs(p, X):
    n = p.n
    a = X.sum(X.q(1, X.F(2 * k + 2) ** 2 * (k + 1)) for k in _ks(p))
    return a - X.q(X.H(n + 1), X.F(2 * n + 2) ** 2) + 1


def rec_quad_lhs(p, X):
    r, s = p.r, p.s
    return X.sum(
        X.q(
            X.F(2 * r * (k + 1)) * X.H(k + s - 1),
            X.F(r * k) * X.F(r * (k + 1)) ** 2 * X.F(r * (k + 2)),
        )
        for k in _ks(p)
    )


def rec_quad_rhs(p, X):
    n, r, s = p.n, p.r, p.s
    a = X.sum(X.q(1, X.F(r * (k + 1)) * X.F(r * (k + 2)) * (k + s)) for k in _ks(p))
    inner = a - X.q(X.H(n + s), X.F(r * (n + 1)) * X.F(r * (n + 2))) + X.q(X.H(s), X.F(r) * X.F(2 * r))
    return X.q(inner, X.F(r))


def rec_quad_part_lhs(p, X):
    return X.sum(
        X.q(X.F(4 * k + 4) * X.H(k), X.F(2 * k) * X.F(2 * k + 2) ** 2 * X.F(2 * k + 4)) for k in _ks(p)
    )


def rec_quad_part_rhs(p, X):
    n = p.n
    a = X.sum(X.q(1, X.F(2 * k + 2) * X.F(2 * k + 4) * (k + 1)) for k in _ks(p))
    return a - X.q(X.H(n + 1), X.F(2 * n + 2) * X.F(2 * n + 4)) + X.q(1, 3)


# --- convolutions and gibonacci products --------------------------------------


def conv_sq_lhs(p, X):
    n = p.n
    return X.sum(X.H(k) * X.F(n - k) ** 2 for k in range(n + 1))


def conv_sq_rhs(p, X):
    n = p.n
    return X.sum(X.q(X.F(n - k) * X.F(n - k - 1), k + 1) for k in range(n + 1))


def gib_sq_lhs(p, X):
    return X.sum(X.H(k) * X.G(k + 1) ** 2 for k in range(p.n + 1))


def gib_sq_rhs(p, X):
    n = p.n
    a = X.sum(X.q(X.G(k + 1) * X.G(k + 2), k + 1) for k in range(n + 1))
    return X.H(n + 1) * X.G(n + 1) * X.G(n + 2) - a


def _gprod(X, start: int, count: int) -> int:
    out = 1
    for j in range(start, start + count):
        out *= X.G(j)
    return out


def gib_prod_lhs(p, X):
    n, m, r, s = p.n, p.m, p.r, p.s
    a = X.sum(X.q(_gprod(X, k + r + 1, 2 * m), k + s) for k in range(n + 1))
    return -a + X.H(n + s) * _gprod(X, n + r + 1, 2 * m) - X.H(s - 1) * _gprod(X, r, 2 * m)


def gib_prod_rhs(p, X):
    n, m, r, s = p.n, p.m, p.r, p.s
    if m % 2 == 0:
        return X.F(m) * X.sum(
            X.H(k + s - 1) * (X.G(k + m + r - 1) + X.G(k + m + r + 1)) * _gprod(X, k + r + 1, 2 * m - 1)
            for k in range(n + 1)
        )
    return X.L(m) * X.sum(
        X.H(k + s - 1) * X.G(k + m + r) * _gprod(X, k + r + 1, 2 * m - 1) for k in range(n + 1)
    )


# --- binomial coefficients in r -----------------------------------------------


def comb_O_F_lhs(p, X):
    return X.sum(
        sg(k - 1) * X.q(X.C(2 * k, k), X.pow(2, 2 * k)) * X.O(k) * X.F(k - 1) for k in _ks(p)
    )


def comb_O_F_rhs(p, X):
    n = p.n
    a = X.sum(
        sg(k - 1) * X.q(X.C(2 * k, k), X.pow(2, 2 * k)) * (2 * k + 1) * (X.O(k + 1) - 1) * X.F(k + 1)
        for k in _ks(p)
    )
    return a + sg(n) * X.q(X.C(2 * n, n), X.pow(2, 2 * n)) * (2 * n + 1) * (X.O(n + 1) - 1) * X.F(n)


def _dr(X, a, b):
    """H_a - H_b, the derivative factor of binom(a, a - b) in its upper index."""
    return X.H(a) - X.H(b)


def comb_H_G_lhs(p, X):
    r, s, t = p.r, p.s, p.t
    return X.sum(X.C(r, k + s) * _dr(X, r, r - k - s) * X.G(k + t) for k in _ks(p))


def comb_H_G_rhs(p, X):
    n, r, s, t = p.n, p.r, p.s, p.t
    a = X.sum(X.C(r - 1, k + s) * _dr(X, r - 1, r - k - s - 1) * X.G(k + t + 2) for k in _ks(p))
    b = X.C(r - 1, s) * _dr(X, r - 1, r - s - 1) * X.G(t + 1)
    c = X.C(r - 1, n + s) * _dr(X, r - 1, r - s - n - 1) * X.G(n + t + 1)
    return a + b - c


def comb_base_lhs(p, X):
    r, s, t = p.r, p.s, p.t
    return X.sum(X.C(r, k + s) * X.G(k + t) for k in _ks(p))


def comb_base_rhs(p, X):
    n, r, s, t = p.n, p.r, p.s, p.t
    a = X.sum(X.C(r - 1, k + s) * X.G(k + t + 2) for k in _ks(p))
    return a + X.C(r - 1, s) * X.G(t + 1) - X.C(r - 1, n + s) * X.G(n + t + 1)


def comb_x_lhs(p, X):
    r, s, x = p.r, p.s, p.x
    return X.sum(X.C(r, k + s) * X.pow(x, k) for k in _ks(p))


def comb_x_rhs(p, X):
    n, r, s, x = p.n, p.r, p.s, p.x
    a = X.sum(X.pow(x, k) * (1 + x) * X.C(r - 1, k + s) for k in _ks(p))
    return a + x * X.C(r - 1, s) - X.pow(x, n + 1) * X.C(r - 1, n + s)


def comb_s_lhs(p, X):
    r, s, t = p.r, p.s, p.t
    return X.sum(X.C(r, k + s) * (X.H(r - k - s) - X.H(k + s)) * X.G(k + t) for k in _ks(p))


def comb_s_rhs(p, X):
    n, r, s, t = p.n, p.r, p.s, p.t
    a = X.sum(X.C(r - 1, k + s) * (X.H(r - 1 - k - s) - X.H(k + s)) * X.G(k + t + 2) for k in _ks(p))
    b = X.C(r - 1, s) * (X.H(r - 1 - s) - X.H(s)) * X.G(t + 1)
    c = X.C(r - 1, n + s) * (X.H(r - 1 - n - s) - X.H(n + s)) * X.G(n + t + 1)
    return a + b - c


def comb_G3_lhs(p, X):
    r, s, t = p.r, p.s, p.t
    return X.sum(X.C(r, k + s) * _dr(X, r, r - k - s) * X.G(3 * k + t) for k in _ks(p))


def comb_G3_rhs(p, X):
    n, r, s, t = p.n, p.r, p.s, p.t
    a = X.sum(X.C(r - 1, k + s) * _dr(X, r - 1, r - k - s - 1) * X.G(3 * k + t + 2) for k in _ks(p))
    b = X.C(r - 1, s) * _dr(X, r - 1, r - s - 1) * X.G(t + 3)
    c = X.C(r - 1, n + s) * _dr(X, r - 1, r - s - n - 1) * X.G(3 * n + t + 3)
    return 2 * a + b - c


def comb_alt_lhs(p, X):
    r, s, t = p.r, p.s, p.t
    return X.sum(sg(k) * X.C(r, k + s) * _dr(X, r, r - k - s) * X.G(k + t) for k in _ks(p))


def comb_alt_rhs(p, X):
    n, r, s, t = p.n, p.r, p.s, p.t
    a = X.sum(
        sg(k + 1) * X.C(r - 1, k + s) * _dr(X, r - 1, r - k - s - 1) * X.G(k + t - 1) for k in _ks(p)
    )
    b = X.C(r - 1, s) * _dr(X, r - 1, r - s - 1) * X.G(t + 1)
    c = sg(n) * X.C(r - 1, n + s) * _dr(X, r - 1, r - s - n - 1) * X.G(n + t + 1)
    return a - b + c


# --- grids --------------------------------------------------------------------

R_POS = range(1, 6)
R_ODD = (1, 3, 5)
R_EVEN = (2, 4)
M_GIB = range(0, 4)


def _r_comb(prior):
    """Integers just above the pole boundary r = n+s, plus half-integers in [-5/2, 5/2]."""
    base = prior["n"] + prior["s"]
    return [base + 1, base + 2] + half_range(-5, 5)


def _r_comb_x(prior):
    return list(range(-3, 6)) + half_range(-5, 5)


X_SAMPLES = (-2, -1, -HALF, HALF, 2, 3 * HALF)

def _st_ok(v):
    return v["s"] + v["t"] >= 1


def _comb_schema():
    return schema(
        n1(),
        s0(),
        t0(),
        halfints("r", _r_comb, "r-n-s-1 not a negative integer"),
        seed(),
    )


ENTRIES = [
    IdentityEntry(
        "shift-binom",
        ABEL_FIB,
        r"F_{k+r+2}}{\binom{t+k+s}{t+1}}",
        schema(n1(), r_shift(), s0(), t0()),
        shift_binom_lhs,
        shift_binom_rhs,
        "shifted Fibonacci sums against inverse binomials",
    ),
    IdentityEntry(
        "shift-simple",
        ABEL_FIB,
        r"(2k+3)F_{k+r+1}",
        schema(n1(), r_shift(), s0()),
        shift_simple_lhs,
        shift_simple_rhs,
        "(s,t) = (0,0) specialization with coefficient 2k+3",
        readings=(Reading("coefficient 2k+2s+1", rhs=shift_simple_rhs_general, note="coefficient from the general s"),),
    ),
    IdentityEntry(
        "harm-shift",
        ABEL_FIB,
        r"H_{t}-H_{k+t+s-1}",
        schema(n1(), r_shift(), s0(), t0(), constraint=_st_ok, doc="s+t>=1"),
        harm_shift_lhs,
        harm_shift_rhs,
        "harmonic differences against inverse binomials",
    ),
    IdentityEntry(
        "prodFF-H",
        ABEL_FIB,
        r"\frac{H_n}{n} F_n^2",
        schema(n1()),
        prodFF_H_lhs,
        prodFF_H_rhs,
        "H_k F_{k-2} F_{k+1} / k",
    ),
    IdentityEntry(
        "prodFF-O",
        ABEL_FIB,
        r"\frac{O_n}{\binom{2n}{n}}F_n^2",
        schema(n1()),
        prodFF_O_lhs,
        prodFF_O_rhs,
        "odd harmonic analogue with central binomials",
    ),
    IdentityEntry(
        "prodFF-gen",
        ABEL_FIB,
        r"F_{k + r - 1} F_{k + r + 2}",
        schema(n1(), r_shift(), s0(), t0()),
        prodFF_gen_lhs,
        prodFF_gen_rhs,
        "general (s, t) form of the F_{k-1}F_{k+2} sums",
    ),
    IdentityEntry(
        "fib4-sq",
        ABEL_FIB,
        r"F_{4(k+r)+2}",
        schema(n1(), r_shift(), s0(), t0()),
        fib4_sq_lhs,
        fib4_sq_rhs,
        "F_{4(k+r)+2} against inverse binomials",
    ),
    IdentityEntry(
        "fib4-sq-simple",
        ABEL_FIB,
        r"F_{2(n+r)+2}^2}{n+s}",
        schema(n1(), r_shift(), s1()),
        fib4_sq_simple_lhs,
        fib4_sq_simple_rhs,
        "t = 0 specialization",
    ),
    IdentityEntry(
        "fib4-sq-H",
        ABEL_FIB,
        r"H_t - H _{k + t + s - 1}",
        schema(n1(), r_shift(), s0(), t0(), constraint=_st_ok, doc="s+t>=1"),
        fib4_sq_H_lhs,
        fib4_sq_H_rhs,
        "harmonic version of the F_{4(k+r)+2} sums",
    ),
    IdentityEntry(
        "fib4-sq-H-simple",
        ABEL_FIB,
        r"H_{k+s}-1",
        schema(n1(), r_shift(), s1()),
        fib4_sq_H_simple_lhs,
        fib4_sq_H_simple_rhs,
        "t = 0 specialization of the harmonic version",
    ),
    IdentityEntry(
        "rec-FF",
        ABEL_FIB,
        r"L_r H_s",
        schema(n1(), ints("r", R_POS, "r>=1"), s0()),
        rec_FF_lhs,
        rec_FF_rhs,
        "(-1)^{rk} H_{k+s-1} / (F_{rk} F_{r(k+1)})",
    ),
    IdentityEntry(
        "rec-FF-part",
        ABEL_FIB,
        r"\frac{F_{n}}{F_{n+1}} H_{n+1}",
        schema(n1()),
        rec_FF_part_lhs,
        rec_FF_part_rhs,
        "r = 1, s = 1 particular case",
    ),
    IdentityEntry(
        "rec-FL",
        ABEL_FIB,
        r"\frac{L_{r(k+1)}}{F_{r(k+1)}}",
        schema(n1(), ints("r", R_POS, "r>=1"), s0()),
        rec_FF_lhs,
        rec_FL_rhs,
        "Lucas form of the right-hand side",
    ),
    IdentityEntry(
        "rec-FL-cor",
        ABEL_FIB,
        r"L_{r(n+1)} - \frac{2}{F_r} F_{r(n+2)}",
        schema(n1(), ints("r", R_POS, "r>=1"), s0()),
        rec_FL_cor_lhs,
        rec_FL_cor_rhs,
        "difference of the Fibonacci and Lucas forms",
    ),
    IdentityEntry(
        "rec-odd",
        ABEL_FIB,
        r"\frac{H_{n+s}}{F_{2r(n+1)}}",
        schema(n1(), ints("r", R_ODD, "odd r>=1"), s0()),
        rec_odd_lhs,
        rec_odd_rhs,
        "F_{r(2k+1)} / (F_{2rk} F_{2r(k+1)}), r odd",
    ),
    IdentityEntry(
        "rec-odd-part",
        ABEL_FIB,
        r"\frac{F_{2k+1}}{F_{2k} F_{2k+2}}",
        schema(n1()),
        rec_odd_part_lhs,
        rec_odd_part_rhs,
        "r = 1, s = 1 particular case",
    ),
    IdentityEntry(
        "rec-sq",
        ABEL_FIB,
        r"F_{rk}^2 F_{r(k+1)}^2",
        schema(n1(), ints("r", R_EVEN, "even r>=2"), s0()),
        rec_sq_lhs,
        rec_sq_rhs,
        "squared reciprocal products, r even",
    ),
    IdentityEntry(
        "rec-sq-part",
        ABEL_FIB,
        r"\frac{F_{4k+2}}{F_{2k}^2 F_{2k+2}^2}",
        schema(n1()),
        rec_sq_part_lhs,
        rec_sq_part_rhs,
        "r = 2, s = 1 particular case",
    ),
    IdentityEntry(
        "rec-quad",
        ABEL_FIB,
        r"F_{rk} F_{r(k+1)}^2 F_{r(k+2)}",
        schema(n1(), ints("r", R_EVEN, "even r>=2"), s0()),
        rec_quad_lhs,
        rec_quad_rhs,
        "four-factor reciprocal products, r even",
    ),
    IdentityEntry(
        "rec-quad-part",
        ABEL_FIB,
        r"\frac{1}{F_{2k+2} F_{2k+4}}",
        schema(n1()),
        rec_quad_part_lhs,
        rec_quad_part_rhs,
        "r = 2, s = 1 particular case",
    ),
    IdentityEntry(
        "conv-sq",
        ABEL_FIB,
        r"H_k F_{n - k}^2",
        schema(n0()),
        conv_sq_lhs,
        conv_sq_rhs,
        "harmonic convolution with F^2",
    ),
    IdentityEntry(
        "gib-sq",
        ABEL_FIB,
        r"H_k G_{k + 1}^2",
        schema(n0(), seed()),
        gib_sq_lhs,
        gib_sq_rhs,
        "harmonic-weighted gibonacci squares",
    ),
    IdentityEntry(
        "gib-prod",
        ABEL_FIB,
        r"if $m$ is odd",
        schema(n0(), ints("m", M_GIB, "m>=0"), r_shift(), s1(), seed()),
        gib_prod_lhs,
        gib_prod_rhs,
        "products of 2m consecutive gibonacci numbers, both parity branches",
    ),
    IdentityEntry(
        "comb-O-F",
        ABEL_COMB,
        r"(2k + 1)(O_{k + 1} - 1)F_{k + 1}",
        schema(n1()),
        comb_O_F_lhs,
        comb_O_F_rhs,
        "r = -1/2 evaluation with central binomials",
    ),
    IdentityEntry(
        "comb-H-G",
        ABEL_COMB,
        r"H_{r - 1} - H_{r - s - 1}",
        _comb_schema(),
        comb_H_G_lhs,
        comb_H_G_rhs,
        "r-derivative of the binomial gibonacci sum",
    ),
    IdentityEntry(
        "comb-H-G-base",
        ABEL_COMB,
        r"\binom{r - 1}{s}G_{t + 1}",
        _comb_schema(),
        comb_base_lhs,
        comb_base_rhs,
        "binomial gibonacci sum",
    ),
    IdentityEntry(
        "comb-H-G-x",
        ABEL_COMB,
        r"x\binom{r - 1}{s} - x^{n + 1}",
        schema(
            n1(),
            s0(),
            halfints("r", _r_comb_x, "integer or half-integer"),
            rationals("x", X_SAMPLES, "rational sample"),
        ),
        comb_x_lhs,
        comb_x_rhs,
        "power-series form in x",
    ),
    IdentityEntry(
        "comb-H-G-s",
        ABEL_COMB,
        r"H_{r-1-k-s}-H_{k+s}",
        _comb_schema(),
        comb_s_lhs,
        comb_s_rhs,
        "s-derivative of the binomial gibonacci sum",
    ),
    IdentityEntry(
        "comb-G3",
        ABEL_COMB,
        r"G_{3k+t+2}",
        _comb_schema(),
        comb_G3_lhs,
        comb_G3_rhs,
        "trisection G_{3k+t}",
    ),
    IdentityEntry(
        "comb-alt",
        ABEL_COMB,
        r"G_{k+t-1}",
        _comb_schema(),
        comb_alt_lhs,
        comb_alt_rhs,
        "alternating signs",
    ),
]
