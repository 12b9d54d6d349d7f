"""Double-word (double-double) arithmetic for phase-critical sums.

Evaluating Z(t) at t ~ 1e8 requires t*log(n) mod 2*pi to well below 1e-9
absolute, but the plain binary64 product t*log(n) is already ~8 digits
short: log(n) carries a half-ulp error near 4e-16 which the multiplication
by t blows up to ~4e-8. The cure is the classic error-free-transformation
toolkit: every sensitive value is carried as an unevaluated sum hi + lo of
two doubles (~32 significant digits), products go through Dekker splitting,
and the final 2*pi reduction subtracts a two-word 2*pi. All kernels are
vectorised and accept scalars or ndarrays interchangeably.

The only transcendental building blocks needed are exp and log of modest
arguments; both are built from numpy's binary64 versions plus one
double-word Newton correction, so there is no dependency on an
arbitrary-precision library at runtime.
"""

from __future__ import annotations

import numpy as np

_SPLIT = 134217729.0  # 2**27 + 1, Dekker splitting constant

# Two-word constants (hi is the correctly rounded double, lo the residual).
TWO_PI_HI = 6.283185307179586
TWO_PI_LO = 2.4492935982947064e-16
INV_2PI_HI = 0.15915494309189535
INV_2PI_LO = -9.839338337591243e-18
PI_HI = 3.141592653589793
PI_LO = 1.2246467991473532e-16
PI_8_HI = 0.39269908169872414
PI_8_LO = 1.5308084989341915e-17
LN2_HI = 0.6931471805599453
LN2_LO = 2.3190468138462996e-17

# 1/n! as two words, n = 2..12, for the exp kernel's Taylor tail.
_INV_FACT = (
    (0.5, 0.0),
    (0.16666666666666666, 9.25185853854297e-18),
    (0.041666666666666664, 2.3129646346357427e-18),
    (0.008333333333333333, 1.1564823173178714e-19),
    (0.001388888888888889, -5.300543954373577e-20),
    (0.0001984126984126984, 1.7209558293420705e-22),
    (2.48015873015873e-05, 2.1511947866775882e-23),
    (2.7557319223985893e-06, -1.858393274046472e-22),
    (2.755731922398589e-07, 2.3767714622250297e-23),
    (2.505210838544172e-08, -1.448814070935912e-24),
    (2.08767569878681e-09, -1.20734505911326e-25),
)


def two_sum(a, b):
    """Error-free a + b: returns (s, e) with s + e == a + b exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def quick_two_sum(a, b):
    """Error-free a + b assuming |a| >= |b|."""
    s = a + b
    e = b - (s - a)
    return s, e


def two_prod(a, b):
    """Error-free a * b via Dekker splitting: (p, e) with p + e == a * b."""
    p = a * b
    ca = _SPLIT * a
    ahi = ca - (ca - a)
    alo = a - ahi
    cb = _SPLIT * b
    bhi = cb - (cb - b)
    blo = b - bhi
    e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, e


def dd_add(ah, al, bh, bl):
    """Accurate double-double addition."""
    sh, se = two_sum(ah, bh)
    th, te = two_sum(al, bl)
    se = se + th
    sh, se = quick_two_sum(sh, se)
    se = se + te
    return quick_two_sum(sh, se)


def dd_add_f(ah, al, b):
    """Double-double plus plain double."""
    sh, se = two_sum(ah, b)
    se = se + al
    return quick_two_sum(sh, se)


def dd_mul(ah, al, bh, bl):
    """Double-double multiplication (error O(eps^2) relative)."""
    ph, pe = two_prod(ah, bh)
    pe = pe + (ah * bl + al * bh)
    return quick_two_sum(ph, pe)


def dd_mul_f(ah, al, b):
    """Double-double times plain double."""
    ph, pe = two_prod(ah, b)
    pe = pe + al * b
    return quick_two_sum(ph, pe)


def dd_neg(ah, al):
    return -ah, -al


def dd_exp(xh, xl):
    """exp of a double-double, |x| <= ~700, relative error ~1e-31.

    Strategy: pull out k*ln2, scale the residue by 2**-6 so the Taylor tail
    through degree 12 is below double-double resolution, then square back
    six times and apply the exact 2**k scaling.
    """
    xh = np.asarray(xh, dtype=float)
    xl = np.asarray(xl, dtype=float)
    k = np.rint(xh / LN2_HI)
    # r = x - k*ln2 in double-double; |r| <= ln2/2
    ph, pe = two_prod(k, LN2_HI)
    rh, rl = dd_add(xh, xl, -ph, -pe)
    rh, rl = dd_add_f(rh, rl, -(k * LN2_LO))
    # scale r by 1/64 (exact)
    rh = rh * 0.015625
    rl = rl * 0.015625
    # Taylor: 1 + r + r^2/2! + ... + r^12/12!, Horner in double-double
    th = np.full_like(rh, _INV_FACT[-1][0])
    tl = np.full_like(rh, _INV_FACT[-1][1])
    for ch, cl in _INV_FACT[-2::-1]:
        th, tl = dd_mul(th, tl, rh, rl)
        th, tl = dd_add(th, tl, ch, cl)
    th, tl = dd_mul(th, tl, rh, rl)
    th, tl = dd_add_f(th, tl, 1.0)
    th, tl = dd_mul(th, tl, rh, rl)
    th, tl = dd_add_f(th, tl, 1.0)
    # square back: exp(r) = exp(r/64)**64
    for _ in range(6):
        th, tl = dd_mul(th, tl, th, tl)
    scale = np.ldexp(1.0, k.astype(np.int64))
    return th * scale, tl * scale


def dd_log(x):
    """log of a positive double or double-double pair, as a double-double.

    y0 = log(hi) in binary64, then log(x) = y0 + log(x*exp(-y0)) with the
    second factor within ~4e-16 of 1, so two series terms suffice. Pass a
    plain array, or a (hi, lo) tuple for a double-double argument.
    """
    if isinstance(x, tuple):
        xh = np.asarray(x[0], dtype=float)
        xl = np.asarray(x[1], dtype=float)
    else:
        xh = np.asarray(x, dtype=float)
        xl = np.zeros_like(xh)
    y = np.log(xh)
    eh, el = dd_exp(-y, np.zeros_like(y))
    rh, rl = dd_mul(eh, el, xh, xl)
    rh, rl = dd_add_f(rh, rl, -1.0)  # r = x*exp(-y) - 1, |r| tiny
    corr = rh - 0.5 * rh * rh
    h, l = two_sum(y, corr)
    l = l + rl
    return quick_two_sum(h, l)


def dd_div_f(ah, al, b):
    """Double-double divided by plain double."""
    qh = ah / b
    # remainder via error-free product
    ph, pe = two_prod(qh, b)
    rh = ((ah - ph) - pe) + al
    ql = rh / b
    return quick_two_sum(qh, ql)


def mod_2pi(wh, wl):
    """Reduce a double-double angle modulo 2*pi to a plain double in
    (-pi - eps, pi + eps]. Valid while |w|/2pi fits an int64 exactly."""
    k = np.rint(wh * INV_2PI_HI)
    ph, pe = two_prod(k, TWO_PI_HI)
    rh, rl = dd_add(wh, wl, -ph, -pe)
    rh, rl = dd_add_f(rh, rl, -(k * TWO_PI_LO))
    return rh + rl


# ----------------------------------------------------------------------
# Cached table of log(n) in double-double form
# ----------------------------------------------------------------------

_LN_TABLE = {"n": 0, "hi": None, "lo": None}


def ln_table(n_max: int):
    """Return (hi, lo) arrays with hi[i] + lo[i] == log(i+1), i < n_max.

    Grown monotonically and cached for the process lifetime; the Riemann-
    Siegel main sum and the Euler-Maclaurin oracle both draw on it.
    """
    n_max = int(n_max)
    if _LN_TABLE["n"] < n_max:
        size = max(n_max, 2 * _LN_TABLE["n"], 1024)
        n = np.arange(1, size + 1, dtype=float)
        hi, lo = dd_log(n)
        _LN_TABLE["n"] = size
        _LN_TABLE["hi"] = hi
        _LN_TABLE["lo"] = lo
    return _LN_TABLE["hi"][:n_max], _LN_TABLE["lo"][:n_max]


def phase_mod_2pi(t: float, lnh, lnl):
    """t * log(n) reduced mod 2*pi, absolute error ~1e-16 up to t ~ 1e11."""
    wh, we = two_prod(t, lnh)
    wl = we + t * lnl
    return mod_2pi(wh, wl)
