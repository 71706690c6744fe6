"""Identities obtained by substituting powers of the golden ratio into two
polynomial binomial identities, and their derivatives in x or b."""

from __future__ import annotations

from fractions import Fraction

from .context import sg
from .core import IdentityEntry, Reading
from .grids import HALF, halfints, n0, rationals, schema, seed, t0

GOULD = "GOULD"


def _k0(p):
    return range(0, p.n + 1)


# --- first polynomial identity and its x-derivative ----------------------------


def gould_base_lhs(p, X):
    return X.sum(X.C(p.x, k) * X.pow(p.y, k) for k in _k0(p))


def gould_base_rhs(p, X):
    n, x, y = p.n, p.x, p.y
    return X.sum(sg(k) * X.C(n - x, k) * X.pow(1 + y, n - k) * X.pow(y, k) for k in _k0(p))


def gould_G_lhs(p, X):
    return X.sum(X.C(p.x, k) * X.G(k + p.t) for k in _k0(p))


def gould_G_rhs(p, X):
    n, x, t = p.n, p.x, p.t
    return X.sum(sg(k) * X.C(n - x, k) * X.G(2 * n - k + t) for k in _k0(p))


def _dx(X, x, k):
    """H_x - H_{x-k}."""
    return X.H(x) - X.H(x - k)


def gould_H_lhs(p, X):
    x, t = p.x, p.t
    return X.sum(X.C(x, k) * _dx(X, x, k) * X.G(k + t) for k in _k0(p))


def gould_H_rhs(p, X):
    n, x, t = p.n, p.x, p.t
    return X.sum(sg(k) * X.C(n - x, k) * _dx(X, n - x, k) * X.G(2 * n - k + t) for k in _k0(p))


def gould_H_rhs_negated(p, X):
    return -gould_H_rhs(p, X)


def gould_O_lhs(p, X):
    t = p.t
    return X.sum(sg(k) * X.q(X.O(k + 1), X.pow(2, 2 * k)) * X.G(k + t) for k in _k0(p))


def _gould_O_sum(p, X):
    n, t = p.n, p.t
    return X.sum(
        sg(k + 1)
        * X.q(X.C(2 * k, k), X.pow(2, 2 * k + 1) * X.C(n, k))
        * (X.O(n + 1) - X.O(n - k))
        * X.G(2 * n - k + t)
        for k in _k0(p)
    )


def gould_O_rhs(p, X):
    return (2 * p.n + 1) * _gould_O_sum(p, X)


def gould_cube_lhs(p, X):
    x, t = p.x, p.t
    return X.sum(X.C(x, k) * _dx(X, x, k) * X.G(k + t) * (X.G(2 * k + t) - sg(k)) for k in _k0(p))


def gould_cube_lhs_3k(p, X):
    x, t = p.x, p.t
    return X.sum(X.C(x, k) * _dx(X, x, k) * X.G(3 * k + t) for k in _k0(p))


def gould_cube_rhs(p, X):
    n, x, t = p.n, p.x, p.t
    return X.sum(
        sg(k) * X.pow(2, n - k) * X.C(n - x, k) * _dx(X, n - x, k) * X.G(2 * n + k + t) for k in _k0(p)
    )


def gould_cube_rhs_negated(p, X):
    return -gould_cube_rhs(p, X)


# --- second polynomial identity and its b-derivative --------------------------


def _bfactor(X, n, b, k):
    """H_b + H_{n-b} - H_{b-n+k}."""
    return X.H(b) + X.H(n - b) - X.H(b - n + k)


def _lhs_b(X, n, b, k):
    """binom(n-b, k-b) H_{k-b}."""
    return X.C(n - b, k - b) * X.H(k - b)


def gould2_base_lhs(p, X):
    n, b, x = p.n, p.b, p.x
    return X.sum(sg(n - k) * _lhs_b(X, n, b, k) * X.pow(1 + x, k) for k in _k0(p))


def gould2_base_rhs(p, X):
    n, b, x = p.n, p.b, p.x
    return X.sum(X.C(b, n - k) * _bfactor(X, n, b, k) * X.pow(x, k) for k in _k0(p))


def gould2_F_lhs(p, X):
    n, b = p.n, p.b
    return X.sum(sg(n - k) * _lhs_b(X, n, b, k) * X.F(2 * k) for k in _k0(p))


def gould2_F_rhs(p, X):
    n, b = p.n, p.b
    return X.sum(X.C(b, n - k) * _bfactor(X, n, b, k) * X.F(k) for k in _k0(p))


def gould2_G_lhs(p, X):
    n, b, t = p.n, p.b, p.t
    return X.sum(sg(n - k) * _lhs_b(X, n, b, k) * X.G(2 * k + t) for k in _k0(p))


def gould2_G_rhs(p, X):
    n, b, t = p.n, p.b, p.t
    return X.sum(X.C(b, n - k) * _bfactor(X, n, b, k) * X.G(k + t) for k in _k0(p))


def gould2_alt_lhs(p, X):
    n, b, t = p.n, p.b, p.t
    return X.sum(sg(n - k) * _lhs_b(X, n, b, k) * X.G(k + t) for k in _k0(p))


def gould2_alt_lhs_mirror(p, X):
    n, b, t = p.n, p.b, p.t
    return X.sum(sg(n) * _lhs_b(X, n, b, k) * X.G(t - k) for k in _k0(p))


def gould2_alt_rhs(p, X):
    n, b, t = p.n, p.b, p.t
    return X.sum(sg(k) * X.C(b, n - k) * _bfactor(X, n, b, k) * X.G(k + t) for k in _k0(p))


def gould2_3t_lhs(p, X):
    n, b, t = p.n, p.b, p.t
    return X.sum(sg(n - k) * X.pow(2, k) * _lhs_b(X, n, b, k) * X.G(2 * k + t) for k in _k0(p))


def gould2_3t_rhs(p, X):
    n, b, t = p.n, p.b, p.t
    return X.sum(X.C(b, n - k) * _bfactor(X, n, b, k) * X.G(3 * k + t) for k in _k0(p))


def gould2_3t_alt_lhs(p, X):
    n, b, t = p.n, p.b, p.t
    return X.sum(sg(n - k + 1) * X.pow(2, k) * _lhs_b(X, n, b, k) * X.G(k + t) for k in _k0(p))


def gould2_3t_alt_lhs_sign_n(p, X):
    n, b, t = p.n, p.b, p.t
    return X.sum(sg(n) * X.pow(2, k) * _lhs_b(X, n, b, k) * X.G(k + t) for k in _k0(p))


def gould2_3t_alt_rhs(p, X):
    n, b, t = p.n, p.b, p.t
    return X.sum(sg(k) * X.C(b, n - k) * _bfactor(X, n, b, k) * X.G(3 * k + t) for k in _k0(p))


# --- grids --------------------------------------------------------------------


def _x_default(prior):
    n = prior["n"]
    return [n, n + 1, n + 2, -HALF]


def _x_with_halves(prior):
    n = prior["n"]
    return _x_default(prior) + [n - HALF, n + HALF]


def _x_gould_G(prior):
    return _x_with_halves(prior) + [0, prior["n"] // 2]


def _x_base(prior):
    return _x_default(prior) + [Fraction(1, 3)]


Y_SAMPLES = (-2, -HALF, Fraction(1, 3), 1, 3)
X_POLY_SAMPLES = (-2, -HALF, Fraction(1, 3), 1, 2)


def _b_default(prior):
    n = prior["n"]
    return [n, n + 1, n + 2, n - HALF, n + HALF]


def _b_ok(v):
    b = v["b"]
    return not (b.is_integer and b.twice < 0)


def _b_schema(*extra):
    return schema(
        n0(),
        halfints("b", _b_default, "b not a negative integer"),
        *extra,
        constraint=_b_ok,
        doc="b not a negative integer",
    )


ENTRIES = [
    IdentityEntry(
        "gould-base",
        GOULD,
        r"(1 + y)^{n - k} y^k",
        schema(n0(), rationals("x", _x_base, "rational sample"), rationals("y", Y_SAMPLES, "rational sample")),
        gould_base_lhs,
        gould_base_rhs,
        "polynomial identity in x and y",
    ),
    IdentityEntry(
        "gould-G",
        GOULD,
        r"G_{2n-k+t}",
        schema(n0(), halfints("x", _x_gould_G, "integer or half-integer"), t0(), seed()),
        gould_G_lhs,
        gould_G_rhs,
        "y = golden ratio substitution",
    ),
    IdentityEntry(
        "gould-H",
        GOULD,
        r"(H_x-H_{x-k})G_{k+t}",
        schema(n0(), halfints("x", _x_with_halves, "integer or half-integer"), t0(), seed()),
        gould_H_lhs,
        gould_H_rhs,
        "x-derivative of the gibonacci form",
        readings=(Reading("negated rhs", rhs=gould_H_rhs_negated, note="d/dx binom(n-x,k) carries a minus sign"),),
    ),
    IdentityEntry(
        "gould-O",
        GOULD,
        r"O_{n+1}-O_{n-k}",
        schema(n0(), t0(), seed()),
        gould_O_lhs,
        gould_O_rhs,
        "x = -1/2 evaluation",
    ),
    IdentityEntry(
        "gould-cube",
        GOULD,
        r"G_{k+t}(G_{2k+t}-(-1)^k)",
        schema(n0(), halfints("x", _x_with_halves, "integer or half-integer"), t0(), seed()),
        gould_cube_lhs,
        gould_cube_rhs,
        "y = cube of the golden ratio",
        readings=(
            Reading(
                "G_{3k+t}, negated rhs",
                lhs=gould_cube_lhs_3k,
                rhs=gould_cube_rhs_negated,
                note="y^k = alpha^{3k} gives G_{3k+t}; d/dx binom(n-x,k) carries a minus sign",
            ),
        ),
    ),
    IdentityEntry(
        "gould2-base",
        GOULD,
        r"H_b + H_{n - b} - H_{b - n + k}",
        _b_schema(rationals("x", X_POLY_SAMPLES, "rational sample")),
        gould2_base_lhs,
        gould2_base_rhs,
        "b-derivative of the second polynomial identity",
    ),
    IdentityEntry(
        "gould2-F",
        GOULD,
        r"H_{k-b} F_{2k}",
        _b_schema(),
        gould2_F_lhs,
        gould2_F_rhs,
        "x = golden ratio, Fibonacci case",
    ),
    IdentityEntry(
        "gould2-G",
        GOULD,
        r"H_{k-b} G_{2k+t}",
        _b_schema(t0(), seed()),
        gould2_G_lhs,
        gould2_G_rhs,
        "x = golden ratio, gibonacci case",
    ),
    IdentityEntry(
        "gould2-alt",
        GOULD,
        r"H_{k-b} G_{k+t}",
        _b_schema(t0(), seed()),
        gould2_alt_lhs,
        gould2_alt_rhs,
        "x = minus the golden ratio",
        readings=(
            Reading(
                "(-1)^n G_{t-k} on the left",
                lhs=gould2_alt_lhs_mirror,
                note="(1 - alpha)^k = (-1)^k alpha^{-k}",
            ),
        ),
    ),
    IdentityEntry(
        "gould2-3t",
        GOULD,
        r"2^k \binom{n-b}{k-b}",
        _b_schema(t0(), seed()),
        gould2_3t_lhs,
        gould2_3t_rhs,
        "x = cube of the golden ratio",
    ),
    IdentityEntry(
        "gould2-3t-alt",
        GOULD,
        r"(-1)^{n-k+1} 2^k",
        _b_schema(t0(), seed()),
        gould2_3t_alt_lhs,
        gould2_3t_alt_rhs,
        "x = minus the cube of the golden ratio",
        readings=(
            Reading("(-1)^n 2^k on the left", lhs=gould2_3t_alt_lhs_sign_n, note="1 - alpha^3 = -2 alpha"),
        ),
    ),
]
