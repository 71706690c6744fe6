"""Identities from binomial-transform pairs: Boyadzhiev's two lemmas and the
Gould-Quaintance transform with its m-derivative."""

from __future__ import annotations

from functools import partial

from .context import sg
from .core import IdentityEntry, Reading
from .grids import HALF, T_MULT, halfints, ints, n0, n1, n_upto, r_shift, s0, schema, seed, t_mult

BT_BOYAD = "BT-BOYAD"
BT_GQ = "BT-GQ"


def _k0(p):
    return range(0, p.n + 1)


def _k1(p):
    return range(1, p.n + 1)


def _below(p):
    return range(0, p.n)


# --- scaled gibonacci pair and the first Boyadzhiev lemma ----------------------


def _pair_minus(X, j):
    """G_0 L_j - G_j."""
    return X.G(0) * X.L(j) - X.G(j)


def bt_scaled_lhs(p, X):
    n, t, r = p.n, p.t, p.r
    Lt = X.L(t)
    return X.sum(sg(k) * X.C(n, k) * X.q(X.G(t * k + r), X.pow(Lt, k)) for k in _k0(p))


def bt_scaled_rhs(p, X):
    n, t, r = p.n, p.t, p.r
    return sg(r) * X.q(_pair_minus(X, t * n - r), X.pow(X.L(t), n))


def boyad_H_G_lhs(p, X):
    n, t, r = p.n, p.t, p.r
    Lt = X.L(t)
    return X.sum(sg(k) * X.C(n, k) * Lt ** (n - k) * X.H(k) * X.G(t * k + r) for k in _k0(p))


def boyad_H_G_rhs(p, X):
    n, t, r = p.n, p.t, p.r
    Lt = X.L(t)
    a = X.sum(X.q(Lt ** (n - k), n - k) * _pair_minus(X, t * k - r) for k in _below(p))
    return sg(r) * X.H(n) * _pair_minus(X, t * n - r) - sg(r) * a


def boyad_H_F_lhs(p, X):
    n, t, r = p.n, p.t, p.r
    Lt = X.L(t)
    return X.sum(sg(k) * X.C(n, k) * Lt ** (n - k) * X.H(k) * X.F(t * k + r) for k in _k0(p))


def boyad_H_F_rhs(p, X):
    n, t, r = p.n, p.t, p.r
    Lt = X.L(t)
    a = X.sum(X.q(Lt ** (n - k) * X.F(t * k - r), n - k) for k in _below(p))
    return sg(r + 1) * X.H(n) * X.F(t * n - r) + sg(r) * a


def boyad_H_L_lhs(p, X):
    n, t, r = p.n, p.t, p.r
    Lt = X.L(t)
    return X.sum(sg(k) * X.C(n, k) * Lt ** (n - k) * X.H(k) * X.L(t * k + r) for k in _k0(p))


def boyad_H_L_rhs(p, X):
    n, t, r = p.n, p.t, p.r
    Lt = X.L(t)
    a = X.sum(X.q(Lt ** (n - k) * X.L(t * k - r), n - k) for k in _below(p))
    return sg(r) * X.H(n) * X.L(t * n - r) - sg(r) * a


def boyad_HF_part_lhs(p, X):
    n = p.n
    return X.sum(sg(k) * X.C(n, k) * X.H(k) * X.F(k) for k in _k0(p))


def boyad_HF_part_rhs(p, X):
    n = p.n
    return -X.H(n) * X.F(n) + X.sum(X.q(X.F(k), n - k) for k in _below(p))


def boyad_HL_part_lhs(p, X):
    n = p.n
    return X.sum(sg(k) * X.C(n, k) * X.H(k) * X.L(k) for k in _k0(p))


def boyad_HL_part_rhs(p, X):
    n = p.n
    return X.H(n) * X.L(n) - X.sum(X.q(X.L(k), n - k) for k in _below(p))


def boyad_rev_lhs(p, X):
    n, t, r = p.n, p.t, p.r
    Lt = X.L(t)
    return X.sum(
        sg(k + r) * X.C(n, k) * X.H(k) * Lt ** (n - k) * _pair_minus(X, t * k - r) for k in _k0(p)
    )


def boyad_rev_rhs(p, X):
    n, t, r = p.n, p.t, p.r
    Lt = X.L(t)
    a = X.sum(X.q(Lt ** (n - k) * X.G(t * k + r), n - k) for k in _below(p))
    return X.H(n) * X.G(t * n + r) - a


def boyad_rev_F_lhs(p, X):
    n, t, r = p.n, p.t, p.r
    Lt = X.L(t)
    return X.sum(sg(k + r + 1) * X.C(n, k) * Lt ** (n - k) * X.H(k) * X.F(t * k - r) for k in _k0(p))


def boyad_rev_F_rhs(p, X):
    n, t, r = p.n, p.t, p.r
    Lt = X.L(t)
    a = X.sum(X.q(Lt ** (n - k) * X.F(t * k + r), n - k) for k in _below(p))
    return X.H(n) * X.F(t * n + r) - a


def boyad_rev_L_lhs(p, X):
    n, t, r = p.n, p.t, p.r
    Lt = X.L(t)
    return X.sum(sg(k + r) * X.C(n, k) * Lt ** (n - k) * X.H(k) * X.L(t * k - r) for k in _k0(p))


def boyad_rev_L_rhs(p, X):
    n, t, r = p.n, p.t, p.r
    Lt = X.L(t)
    a = X.sum(X.q(Lt ** (n - k) * X.L(t * k + r), n - k) for k in _below(p))
    return X.H(n) * X.L(t * n + r) - a


# --- second Boyadzhiev lemma ---------------------------------------------------
# Every G_{n-2k} below goes through ``gm``. The printed form uses G_{n-2k};
# the mirrored reading uses (-1)^{n+1} G_{2k-n}, which agrees with it when G_0 = 0.


def g_printed(X, n, k):
    return X.G(n - 2 * k)


def g_mirrored(X, n, k):
    return sg(n + 1) * X.G(2 * k - n)


def bt2_m_lhs(p, X):
    n, m = p.n, p.m
    return X.sum(sg(k + 1) * X.C(n, k) * X.q(m * X.G(k) * X.H(k + m), k + m) for k in _k0(p))


def bt2_m_rhs(p, X, gm=g_printed):
    n, m = p.n, p.m
    return X.sum(
        sg(k) * X.C(n, k) * X.Ci(k + m, m) * gm(X, n, k) * (X.H(k + m) - X.H(k)) for k in _k0(p)
    )


def bt2_m_sym_lhs(p, X):
    n, m = p.n, p.m
    return X.sum(sg(k + 1) * X.C(n, k) * X.Ci(k + m, m) * X.G(k) * (X.H(k + m) - X.H(k)) for k in _k0(p))


def bt2_m_sym_rhs(p, X, gm=g_printed):
    n, m = p.n, p.m
    return X.sum(sg(k) * X.C(n, k) * X.q(m, k + m) * gm(X, n, k) * X.H(k + m) for k in _k0(p))


def bt2_m1a_lhs(p, X):
    n = p.n
    return X.sum(sg(k + 1) * X.C(n, k) * X.q(X.G(k) * X.H(k + 1), k + 1) for k in _k0(p))


def bt2_m1a_rhs(p, X, gm=g_printed):
    n = p.n
    return X.sum(sg(k) * X.C(n, k) * X.q(gm(X, n, k), (k + 1) ** 2) for k in _k0(p))


def bt2_m1b_lhs(p, X):
    n = p.n
    return X.sum(sg(k + 1) * X.C(n, k) * X.q(X.G(k), (k + 1) ** 2) for k in _k0(p))


def bt2_m1b_rhs(p, X, gm=g_printed):
    n = p.n
    return X.sum(sg(k) * X.C(n, k) * X.q(gm(X, n, k) * X.H(k + 1), k + 1) for k in _k0(p))


def _central(X, n, k):
    """4^k C(n,k) / C(2k,k)."""
    return X.q(X.pow(2, 2 * k) * X.C(n, k), X.C(2 * k, k))


def prop1_ln2_a_lhs(p, X, gm=None):
    n = p.n
    return 2 * X.sum(sg(k + 1) * X.C(n, k) * X.q(X.ln2 - X.O(k), 2 * k - 1) * X.G(k) for k in _k0(p))


def prop1_ln2_a_rhs(p, X, gm=g_printed):
    n = p.n
    return X.sum(
        sg(k) * _central(X, n, k) * (2 * X.O(k) - X.H(k) - 2 * X.ln2) * gm(X, n, k) for k in _k0(p)
    )


def prop1_ln2_b_lhs(p, X):
    n = p.n
    return X.sum(sg(k + 1) * _central(X, n, k) * (2 * X.O(k) - X.H(k) - 2 * X.ln2) * X.G(k) for k in _k0(p))


def prop1_ln2_b_rhs(p, X, gm=g_printed):
    n = p.n
    return 2 * X.sum(
        sg(k + 1) * X.C(n, k) * X.q(X.O(k) - X.ln2, 2 * k - 1) * gm(X, n, k) for k in _k0(p)
    )


def prop1_a_lhs(p, X):
    n = p.n
    return X.sum(sg(k + 1) * X.C(n, k) * X.q(X.G(k), 2 * k - 1) for k in _k0(p))


def prop1_a_rhs(p, X, gm=g_printed):
    n = p.n
    return X.sum(sg(k + 1) * _central(X, n, k) * gm(X, n, k) for k in _k0(p))


def prop1_b_lhs(p, X):
    n = p.n
    return X.sum(sg(k + 1) * X.C(n, k) * X.q(X.O(k) * X.G(k), 2 * k - 1) for k in _k0(p))


def prop1_b_rhs(p, X, gm=g_printed):
    n = p.n
    return X.sum(
        sg(k) * X.q(X.pow(2, 2 * k - 1) * X.C(n, k), X.C(2 * k, k)) * (X.H(k) - 2 * X.O(k)) * gm(X, n, k)
        for k in _k0(p)
    )


def prop2_a_lhs(p, X, gm=g_printed):
    n = p.n
    return X.sum(sg(k) * X.C(n, k) * X.q(gm(X, n, k), 2 * k - 1) for k in _k0(p))


def prop2_a_rhs(p, X):
    n = p.n
    return X.sum(sg(k) * _central(X, n, k) * X.G(k) for k in _k0(p))


def prop2_b_lhs(p, X, gm=g_printed):
    n = p.n
    return X.sum(sg(k + 1) * X.C(n, k) * X.q(X.O(k) * gm(X, n, k), 2 * k - 1) for k in _k0(p))


def prop2_b_rhs(p, X):
    n = p.n
    return X.sum(
        sg(k + 1) * X.q(X.pow(2, 2 * k - 1) * X.C(n, k), X.C(2 * k, k)) * (2 * X.O(k) - X.H(k)) * X.G(k)
        for k in _k0(p)
    )


def bt3_lhs(p, X):
    n, m = p.n, p.m
    return X.sum(sg(k + 1) * X.C(n, k) * X.G(k) * X.H(k + m) for k in _k1(p))


def bt3_rhs(p, X, gm=g_printed, g0_term=False):
    n, m = p.n, p.m
    a = X.sum(sg(k + 1) * X.C(n, k) * X.Ci(k + m, m) * X.q(gm(X, n, k), k) for k in _k1(p))
    out = gm(X, n, 0) * X.H(m) + a
    if g0_term:
        out = out + X.G(0) * X.H(m)
    return out


def bt3_sym_lhs(p, X):
    n, m = p.n, p.m
    return X.sum(sg(k) * X.C(n, k) * X.Ci(k + m, m) * X.q(X.G(k), k) for k in _k1(p))


def bt3_sym_rhs(p, X, gm=g_printed, g0_term=False):
    n, m = p.n, p.m
    out = X.sum(sg(k) * X.C(n, k) * gm(X, n, k) * X.H(k + m) for k in _k0(p))
    if g0_term:
        out = out + X.G(0) * X.H(m)
    return out


def bt3_m0a_lhs(p, X):
    n = p.n
    return X.sum(sg(k) * X.C(n, k) * X.G(k) * X.H(k) for k in _k1(p))


def bt3_m0a_rhs(p, X, gm=g_printed):
    n = p.n
    return X.sum(sg(k) * X.C(n, k) * X.q(gm(X, n, k), k) for k in _k1(p))


def bt3_m0b_lhs(p, X, sign=1):
    n = p.n
    return sign * X.sum(sg(k + 1) * X.C(n, k) * X.q(X.G(k), k) for k in _k1(p))


def bt3_m0b_rhs(p, X, gm=g_printed):
    n = p.n
    return X.sum(sg(k) * X.C(n, k) * gm(X, n, k) * X.H(k) for k in _k1(p))


# --- Gould-Quaintance transform --------------------------------------------------


def _tt(X, p, k):
    """G_{tk+s} / L_t^k."""
    return X.q(X.G(p.t * k + p.s), X.pow(X.L(p.t), k))


def _d(X, p, k):
    """(G_0 L_{tk-s} - G_{tk-s}) / L_t^k."""
    return X.q(_pair_minus(X, p.t * k - p.s), X.pow(X.L(p.t), k))


def _tau(X, p, k):
    return sg(p.s) * _d(X, p, k)


def _gq_lhs(p, X, left):
    n, m, r = p.n, p.m, p.r
    return X.sum(
        sg(k)
        * X.C(n, k)
        * X.Ci(r + m + n - k + 1, m + 1)
        * (X.H(m + 1) - X.H(r + m + n - k + 1))
        * left(X, p, k)
        for k in _k0(p)
    )


def _gq_rhs(p, X, right):
    n, m, r = p.n, p.m, p.r
    a = X.sum(
        sg(n - k)
        * X.C(n, k)
        * X.Ci(r + m + n - k + 1, r + 1)
        * (X.H(m + n - k) - X.H(r + m + n - k + 1))
        * right(X, p, k)
        for k in _k0(p)
    )
    b = X.sum(sg(n - k) * X.C(n, k) * X.Ci(r + m + n - k + 1, r + 1) * right(X, p, k) for k in _k0(p))
    return X.q(m + 1, r + 1) * a + X.q(1, r + 1) * b


gq_thm_lhs = partial(_gq_lhs, left=_tt)
gq_thm_rhs = partial(_gq_rhs, right=_tau)
gq_thm2_lhs = partial(_gq_lhs, left=_tau)
gq_thm2_rhs = partial(_gq_rhs, right=_tt)


def gq_cor_m0_lhs(p, X):
    n, r = p.n, p.r
    return X.sum(
        sg(k) * X.C(n, k) * X.q(1 - X.H(r + n - k + 1), r + n - k + 1) * _tt(X, p, k) for k in _k0(p)
    )


def _m0_rhs_sums(p, X, sign_s, right):
    n, r, s = p.n, p.r, p.s
    a = X.sum(
        sg(n - k - sign_s * s)
        * X.C(n, k)
        * X.Ci(r + n - k + 1, r + 1)
        * (X.H(n - k) - X.H(r + n - k + 1))
        * right(X, p, k)
        for k in _k0(p)
    )
    b = X.sum(sg(n - k - sign_s * s) * X.C(n, k) * X.Ci(r + n - k + 1, r + 1) * right(X, p, k) for k in _k0(p))
    return X.q(1, r + 1) * a + X.q(1, r + 1) * b


def gq_cor_m0_rhs(p, X):
    return _m0_rhs_sums(p, X, 1, _d)


def gq_cor2_m0_lhs(p, X):
    n, r, s = p.n, p.r, p.s
    return X.sum(
        sg(k - s) * X.C(n, k) * X.q(1 - X.H(r + n - k + 1), r + n - k + 1) * _d(X, p, k) for k in _k0(p)
    )


def gq_cor2_m0_rhs(p, X):
    return _m0_rhs_sums(p, X, 0, _tt)


def _e_printed(X, p, k):
    """(G_0 L_{tk+s} - G_{tk-s}) / L_t^k, subscripts as printed."""
    return X.q(X.G(0) * X.L(p.t * k + p.s) - X.G(p.t * k - p.s), X.pow(X.L(p.t), k))


def _e_minus(X, p, k):
    return _d(X, p, k)


def _e_plus(X, p, k):
    return X.q(X.G(0) * X.L(p.t * k + p.s) - X.G(p.t * k + p.s), X.pow(X.L(p.t), k))


def _part_sums(p, X, f):
    n, s = p.n, p.s
    a = X.sum(sg(n - k - s) * X.C(n, k) * X.q(f(X, p, k), n - k + 1) for k in _k0(p))
    b = X.sum(sg(n - k - s) * X.C(n, k) * X.q(f(X, p, k), (n - k + 1) ** 2) for k in _k0(p))
    return a - b


def _m0_part_left(p, X, f):
    n = p.n
    return X.sum(sg(k) * X.C(n, k) * X.q(1 - X.H(n - k + 1), n - k + 1) * f(X, p, k) for k in _k0(p))


gq_cor_m0_part_lhs = partial(_m0_part_left, f=_tt)
gq_cor_m0_part_rhs = partial(_part_sums, f=_e_printed)
gq_cor2_m0_part_lhs = partial(_m0_part_left, f=_e_printed)
gq_cor2_m0_part_rhs = partial(_part_sums, f=_tt)


def _odd_left(p, X, f, sign_s):
    n, r, s = p.n, p.r, p.s
    return X.sum(
        sg(k + 1 - sign_s * s)
        * X.C(n, k)
        * X.q(X.pow(2, 2 * (r + n - k) + 1), X.C(2 * (r + n - k), r + n - k))
        * X.O(r + n - k)
        * f(X, p, k)
        for k in _k0(p)
    )


def _w_printed(X, n, r, k):
    pk = r + n - k
    return X.q(X.C(n, k) * X.C(2 * (n - k - 1), n - k - 1), X.C(2 * pk, r + 1) * X.C(pk, r + 1))


def _w_fixed(X, n, r, k):
    pk = r + n - k
    return X.q(X.C(n, k) * X.C(2 * (n - k - 1), n - k - 1), X.C(2 * pk, pk) * X.C(pk, r + 1))


def _odd_right_printed(p, X, f, s_in_sums):
    n, r, s = p.n, p.r, p.s
    e = s if s_in_sums else 0
    pre = X.q(X.pow(2, 2 * (r + 1)), r + 1)
    a = X.sum(
        sg(n - k + 1 + e) * _w_printed(X, n, r, k) * (X.O(n - k - 1) - X.O(r + n - k)) * f(X, p, k)
        for k in _below(p)
    )
    b = X.sum(sg(n - k + 1 + e) * _w_printed(X, n, r, k) * f(X, p, k) for k in _below(p))
    last = sg(s) * X.q(X.C(2 * r, r), (r + 1) ** 2) * (1 - X.O(r)) * f(X, p, n)
    return pre * a + pre * b + last


def _odd_right_rederived(p, X, f):
    n, r = p.n, p.r
    pre = X.q(X.pow(2, 2 * (r + 1)), r + 1)
    a = X.sum(
        sg(n - k) * _w_fixed(X, n, r, k) * (1 - X.O(n - k - 1) + X.O(r + n - k)) * f(X, p, k) for k in _below(p)
    )
    return pre * a - X.q(X.pow(2, 2 * r + 1) * X.O(r), X.C(2 * r, r)) * f(X, p, n)


gq_cor_odd_lhs = partial(_odd_left, f=_tt, sign_s=0)
gq_cor_odd_rhs = partial(_odd_right_printed, f=_d, s_in_sums=True)
gq_cor_odd_rhs_rederived = partial(_odd_right_rederived, f=_tau)
gq_cor2_odd_lhs = partial(_odd_left, f=_d, sign_s=1)
gq_cor2_odd_rhs = partial(_odd_right_printed, f=_tt, s_in_sums=False)
gq_cor2_odd_rhs_rederived = partial(_odd_right_rederived, f=_tt)


def _odd_part_left(p, X, f, power_shift):
    n = p.n
    return X.sum(
        sg(k + 1)
        * X.pow(2, 2 * (n - k) + power_shift)
        * X.q(X.C(n, k), X.C(2 * n - 2 * k, n - k))
        * X.O(n - k)
        * f(X, p, k)
        for k in _k0(p)
    )


def _odd_part_right(p, X, f):
    n, s = p.n, p.s

    def w(k):
        return X.C(n, k) * X.C(2 * (n - k - 1), n - k - 1)

    a = X.sum(sg(n - k + s + 1) * X.q(w(k), (n - k) ** 2) * f(X, p, k) for k in _below(p))
    b = X.sum(sg(n - k + s + 1) * X.q(w(k), (n - k) ** 2 * (2 * n - 2 * k - 1)) * f(X, p, k) for k in _below(p))
    return a - b


def _odd_part_right_rederived(p, X, f):
    n = p.n
    return X.sum(
        sg(n - k) * X.C(n, k) * X.q(4 * (n - k), (2 * (n - k) - 1) ** 2) * f(X, p, k) for k in _below(p)
    )


gq_cor_odd_part_lhs = partial(_odd_part_left, f=_tt, power_shift=0)
gq_cor_odd_part_rhs = partial(_odd_part_right, f=_d)
gq_cor_odd_part_lhs_rederived = partial(_odd_part_left, f=_tt, power_shift=1)
gq_cor_odd_part_rhs_rederived = partial(_odd_part_right_rederived, f=_tau)
gq_cor2_odd_part_lhs = partial(_odd_part_left, f=_d, power_shift=0)
gq_cor2_odd_part_rhs = partial(_odd_part_right, f=_tt)
gq_cor2_odd_part_lhs_rederived = partial(_odd_part_left, f=_tau, power_shift=1)
gq_cor2_odd_part_rhs_rederived = partial(_odd_part_right_rederived, f=_tt)


# --- grids --------------------------------------------------------------------

M_BT2 = (-HALF, 1, 2, 3)
M_BT3 = (-HALF, 0, 1, 2, 3)
M_GQ = (-3 * HALF, -HALF, 0, 1, 2, 3)
R_GQ = (-HALF, HALF, 0, 1, 2, 3)
R_M0 = (-HALF, HALF, 0, 1, 2, 3)
R_ODD = range(0, 6)
N_GQ = 10


def _not_both_half(v):
    return v["m"].is_integer or v["r"].is_integer


def _not_neg_int(*names):
    def ok(v):
        return all(not (v[k].is_integer and v[k].twice < 0) for k in names)

    return ok


def _gq_schema():
    def ok(v):
        return _not_neg_int("m", "r")(v) and _not_both_half(v)

    return schema(
        n_upto(N_GQ),
        halfints("m", M_GQ, "not a negative integer"),
        halfints("r", R_GQ, "not a negative integer"),
        s0(),
        t_mult(),
        seed(),
        constraint=ok,
        doc="m, r not negative integers and not both half-integers",
    )


def _m0_schema():
    return schema(
        n_upto(N_GQ),
        halfints("r", R_M0, "not a negative integer"),
        s0(),
        t_mult(),
        seed(),
        constraint=_not_neg_int("r"),
        doc="r not a negative integer",
    )


def _odd_schema():
    return schema(n_upto(N_GQ), ints("r", R_ODD, "r>=0"), s0(), t_mult(), seed())


def _part_schema():
    return schema(n0(), s0(), t_mult(), seed())


def _mirror(fn, **kw):
    return partial(fn, gm=g_mirrored, **kw)


MIRROR = "G_{n-2k} as (-1)^{n+1} G_{2k-n}"
MIRROR_NOTE = "the two sides of the lemma agree for G_0 = 0 only"


def _mirror_rhs(fn):
    return (Reading(MIRROR, rhs=_mirror(fn), note=MIRROR_NOTE),)


def _tk_readings(side):
    out = []
    for name, f in (("tk-s", _e_minus), ("tk+s", _e_plus)):
        if side == "rhs":
            out.append(Reading(name, rhs=partial(_part_sums, f=f), note=f"both subscripts read as {name}"))
        else:
            out.append(Reading(name, lhs=partial(_m0_part_left, f=f), note=f"both subscripts read as {name}"))
    return tuple(out)


REDERIVED = "rederived at m = -3/2"

ENTRIES = [
    IdentityEntry(
        "bt-G-scaled",
        BT_BOYAD,
        r"G_0 L_{tn - r} - G_{tn - r}",
        schema(n0(), t_mult(), r_shift(), seed()),
        bt_scaled_lhs,
        bt_scaled_rhs,
        "binomial transform of G_{tk+r}/L_t^k",
    ),
    IdentityEntry(
        "boyad-H-G",
        BT_BOYAD,
        r"L_t^{n - k} H_k G_{tk + r}",
        schema(n0(), t_mult(), r_shift(), seed()),
        boyad_H_G_lhs,
        boyad_H_G_rhs,
        "first lemma on the scaled gibonacci pair",
    ),
    IdentityEntry(
        "boyad-H-F",
        BT_BOYAD,
        r"L_t^{n - k} H_k F_{tk + r}",
        schema(n0(), t_mult(), r_shift()),
        boyad_H_F_lhs,
        boyad_H_F_rhs,
        "Fibonacci case",
    ),
    IdentityEntry(
        "boyad-H-L",
        BT_BOYAD,
        r"L_t^{n - k} H_k L_{tk + r}",
        schema(n0(), t_mult(), r_shift()),
        boyad_H_L_lhs,
        boyad_H_L_rhs,
        "Lucas case",
    ),
    IdentityEntry(
        "boyad-HF-part",
        BT_BOYAD,
        r"- H_n F_n + \sum",
        schema(n0()),
        boyad_HF_part_lhs,
        boyad_HF_part_rhs,
        "t = 1, r = 0 Fibonacci case",
    ),
    IdentityEntry(
        "boyad-HL-part",
        BT_BOYAD,
        r"H_n L_n - \sum",
        schema(n0()),
        boyad_HL_part_lhs,
        boyad_HL_part_rhs,
        "t = 1, r = 0 Lucas case",
    ),
    IdentityEntry(
        "boyad-rev",
        BT_BOYAD,
        r"H_n G_{tn + r}",
        schema(n0(), t_mult(), r_shift(), seed()),
        boyad_rev_lhs,
        boyad_rev_rhs,
        "first lemma with the pair reversed",
    ),
    IdentityEntry(
        "boyad-rev-F",
        BT_BOYAD,
        r"H_n F_{tn+r}",
        schema(n0(), t_mult(), r_shift()),
        boyad_rev_F_lhs,
        boyad_rev_F_rhs,
        "reversed pair, Fibonacci case",
    ),
    IdentityEntry(
        "boyad-rev-L",
        BT_BOYAD,
        r"H_n F_{tn+r}",
        schema(n0(), t_mult(), r_shift()),
        boyad_rev_L_lhs,
        boyad_rev_L_rhs,
        "reversed pair, Lucas case",
    ),
    IdentityEntry(
        "bt2-m",
        BT_BOYAD,
        r"m\,G_k H_{k + m}",
        schema(n0(), halfints("m", M_BT2, "integer >= 1 or -1/2"), seed()),
        bt2_m_lhs,
        bt2_m_rhs,
        "second lemma with H_{k+m}/(k+m)",
        readings=_mirror_rhs(bt2_m_rhs),
    ),
    IdentityEntry(
        "bt2-m-sym",
        BT_BOYAD,
        r"\frac{m}{k + m}G_{n - 2k} H_{k + m}",
        schema(n0(), halfints("m", M_BT2, "integer >= 1 or -1/2"), seed()),
        bt2_m_sym_lhs,
        bt2_m_sym_rhs,
        "second lemma, symmetric pair",
        readings=_mirror_rhs(bt2_m_sym_rhs),
    ),
    IdentityEntry(
        "bt2-m1a",
        BT_BOYAD,
        r"\frac{G_{n - 2k} }{\left( {k + 1} \right)^2 }",
        schema(n0(), seed()),
        bt2_m1a_lhs,
        bt2_m1a_rhs,
        "m = 1",
        readings=_mirror_rhs(bt2_m1a_rhs),
    ),
    IdentityEntry(
        "bt2-m1b",
        BT_BOYAD,
        r"\frac{G_{n - 2k} H_{k + 1} }{k + 1}",
        schema(n0(), seed()),
        bt2_m1b_lhs,
        bt2_m1b_rhs,
        "m = 1, symmetric pair",
        readings=_mirror_rhs(bt2_m1b_rhs),
    ),
    IdentityEntry(
        "prop1-ln2-a",
        BT_BOYAD,
        r"2O_k-H_k-2\ln 2",
        schema(n0(), seed()),
        prop1_ln2_a_lhs,
        prop1_ln2_a_rhs,
        "m = -1/2, values in Q[ln2]",
        readings=_mirror_rhs(prop1_ln2_a_rhs),
    ),
    IdentityEntry(
        "prop1-ln2-b",
        BT_BOYAD,
        r"O_k-\ln 2",
        schema(n0(), seed()),
        prop1_ln2_b_lhs,
        prop1_ln2_b_rhs,
        "m = -1/2 symmetric pair, values in Q[ln2]",
        readings=_mirror_rhs(prop1_ln2_b_rhs),
    ),
    IdentityEntry(
        "prop1-a",
        BT_BOYAD,
        r"2^{2k}\frac{\binom{n}{k}}{\binom{2k}{k}}G_{n-2k}",
        schema(n0(), seed()),
        prop1_a_lhs,
        prop1_a_rhs,
        "ln2 coefficients of the m = -1/2 identity",
        readings=_mirror_rhs(prop1_a_rhs),
    ),
    IdentityEntry(
        "prop1-b",
        BT_BOYAD,
        r"(H_k-2O_k)G_{n-2k}",
        schema(n0(), seed()),
        prop1_b_lhs,
        prop1_b_rhs,
        "rational parts of the m = -1/2 identity",
        readings=_mirror_rhs(prop1_b_rhs),
    ),
    IdentityEntry(
        "prop2-a",
        BT_BOYAD,
        r"\frac{G_{n-2k}}{2k-1}",
        schema(n0(), seed()),
        prop2_a_lhs,
        prop2_a_rhs,
        "ln2 coefficients, symmetric pair",
        readings=(Reading(MIRROR, lhs=_mirror(prop2_a_lhs), note=MIRROR_NOTE),),
    ),
    IdentityEntry(
        "prop2-b",
        BT_BOYAD,
        r"(2O_k-H_k)G_k",
        schema(n0(), seed()),
        prop2_b_lhs,
        prop2_b_rhs,
        "rational parts, symmetric pair",
        readings=(Reading(MIRROR, lhs=_mirror(prop2_b_lhs), note=MIRROR_NOTE),),
    ),
    IdentityEntry(
        "bt3",
        BT_BOYAD,
        r"G_n H_m",
        schema(n1(), halfints("m", M_BT3, "integer >= 0 or -1/2"), seed()),
        bt3_lhs,
        bt3_rhs,
        "second lemma with s_k = H_{k+m}",
        readings=(
            Reading(MIRROR, rhs=_mirror(bt3_rhs), note=MIRROR_NOTE),
            Reading(
                MIRROR + ", plus G_0 H_m",
                rhs=_mirror(bt3_rhs, g0_term=True),
                note="the k = 0 term of the left sum contributes G_0 H_m",
            ),
        ),
    ),
    IdentityEntry(
        "bt3-sym",
        BT_BOYAD,
        r"\binom{k + m}{m}^{ - 1} \frac{G_k}{k}",
        schema(n1(), halfints("m", M_BT3, "integer >= 0 or -1/2"), seed()),
        bt3_sym_lhs,
        bt3_sym_rhs,
        "symmetric pair",
        readings=(
            Reading(MIRROR, rhs=_mirror(bt3_sym_rhs), note=MIRROR_NOTE),
            Reading(
                MIRROR + ", plus G_0 H_m",
                rhs=_mirror(bt3_sym_rhs, g0_term=True),
                note="the k = 0 term of the left sum contributes G_0 H_m",
            ),
        ),
    ),
    IdentityEntry(
        "bt3-m0a",
        BT_BOYAD,
        r"G_{n - 2k} H_k",
        schema(n1(), seed()),
        bt3_m0a_lhs,
        bt3_m0a_rhs,
        "m = 0",
        readings=_mirror_rhs(bt3_m0a_rhs),
    ),
    IdentityEntry(
        "bt3-m0b",
        BT_BOYAD,
        r"G_{n - 2k} H_k",
        schema(n1(), seed()),
        bt3_m0b_lhs,
        bt3_m0b_rhs,
        "m = 0, symmetric pair",
        readings=(
            Reading(MIRROR, rhs=_mirror(bt3_m0b_rhs), note=MIRROR_NOTE),
            Reading("(-1)^k on the left", lhs=partial(bt3_m0b_lhs, sign=-1), note="sign of the left sum"),
            Reading(
                "(-1)^k on the left, " + MIRROR,
                lhs=partial(bt3_m0b_lhs, sign=-1),
                rhs=_mirror(bt3_m0b_rhs),
                note="sign of the left sum; " + MIRROR_NOTE,
            ),
        ),
    ),
    IdentityEntry(
        "gq-thm",
        BT_GQ,
        r"H_{m+1}-H_{r+m+n-k+1}",
        _gq_schema(),
        gq_thm_lhs,
        gq_thm_rhs,
        "m-derivative of the transform with t_k = G_{tk+s}/L_t^k",
    ),
    IdentityEntry(
        "gq-cor-m0",
        BT_GQ,
        r"\left(1-H_{r+n-k+1}\right)",
        _m0_schema(),
        gq_cor_m0_lhs,
        gq_cor_m0_rhs,
        "m = 0",
    ),
    IdentityEntry(
        "gq-cor-m0-part",
        BT_GQ,
        r"(1-H_{n-k+1})",
        _part_schema(),
        gq_cor_m0_part_lhs,
        gq_cor_m0_part_rhs,
        "m = 0, r = 0",
        readings=_tk_readings("rhs"),
    ),
    IdentityEntry(
        "gq-cor-odd",
        BT_GQ,
        r"(1-O_r)\left(G_0L_{tn-s}-G_{tn-s}\right)",
        _odd_schema(),
        gq_cor_odd_lhs,
        gq_cor_odd_rhs,
        "m = -3/2",
        readings=(
            Reading(
                REDERIVED,
                rhs=gq_cor_odd_rhs_rederived,
                note="binom(2p,p) in place of binom(2p,r+1), sign of the second sum, and the k = n term",
            ),
        ),
    ),
    IdentityEntry(
        "gq-cor-odd-part",
        BT_GQ,
        r"O_{n-k}G_{tk+s}",
        _part_schema(),
        gq_cor_odd_part_lhs,
        gq_cor_odd_part_rhs,
        "m = -3/2, r = 0",
        readings=(
            Reading(
                REDERIVED,
                lhs=gq_cor_odd_part_lhs_rederived,
                rhs=gq_cor_odd_part_rhs_rederived,
                note="2^{2(n-k)+1} on the left; right side 4j/(2j-1)^2 with j = n-k",
            ),
        ),
    ),
    IdentityEntry(
        "gq-thm2",
        BT_GQ,
        r"H_{m+n-k}-H_{r+m+n-k+1}",
        _gq_schema(),
        gq_thm2_lhs,
        gq_thm2_rhs,
        "mirrored pair assignment",
    ),
    IdentityEntry(
        "gq-cor2-m0",
        BT_GQ,
        r"\left(1-H_{r+n-k+1}\right)",
        _m0_schema(),
        gq_cor2_m0_lhs,
        gq_cor2_m0_rhs,
        "m = 0, mirrored pair",
    ),
    IdentityEntry(
        "gq-cor2-m0-part",
        BT_GQ,
        r"(1-H_{n-k+1})",
        _part_schema(),
        gq_cor2_m0_part_lhs,
        gq_cor2_m0_part_rhs,
        "m = 0, r = 0, mirrored pair",
        readings=_tk_readings("lhs"),
    ),
    IdentityEntry(
        "gq-cor2-odd",
        BT_GQ,
        r"(1-O_r)G_{tn+s}",
        _odd_schema(),
        gq_cor2_odd_lhs,
        gq_cor2_odd_rhs,
        "m = -3/2, mirrored pair",
        readings=(
            Reading(
                REDERIVED,
                rhs=gq_cor2_odd_rhs_rederived,
                note="binom(2p,p) in place of binom(2p,r+1), sign of the second sum, and the k = n term",
            ),
        ),
    ),
    IdentityEntry(
        "gq-cor2-odd-part",
        BT_GQ,
        r"O_{n-k}\left(G_0L_{tk-s}",
        _part_schema(),
        gq_cor2_odd_part_lhs,
        gq_cor2_odd_part_rhs,
        "m = -3/2, r = 0, mirrored pair",
        readings=(
            Reading(
                REDERIVED,
                lhs=gq_cor2_odd_part_lhs_rederived,
                rhs=gq_cor2_odd_part_rhs_rederived,
                note="2^{2(n-k)+1} on the left; right side 4j/(2j-1)^2 with j = n-k",
            ),
        ),
    ),
]
