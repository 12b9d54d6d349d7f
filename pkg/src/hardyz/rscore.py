"""Critical-line evaluators: theta, chi, zeta, and Hardy's Z.

Z(t) = e^{i*theta(t)} zeta(1/2+it) is real for real t, and its sign changes
are exactly the critical-line zeros of zeta. Two independent evaluation
routes are provided:

* ``zeta_em``            -- Euler-Maclaurin with an explicit remainder bound,
                            the slow high-precision oracle (abs error <=1e-12
                            for |t| <= 1e6);
* the Riemann-Siegel sum -- main sum of floor(sqrt(t/2pi)) terms plus up to
                            four correction terms, used by ``z_eval`` above
                            ``ScanConfig.em_switch_t``.

Both routes share the double-word phase reduction from :mod:`hardyz.ddmath`,
so t*log(n) keeps ~1e-16 absolute accuracy far beyond t = 1e8 where plain
binary64 would have lost the game.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import loggamma

from . import ddmath as dd
from .config import ScanConfig, DEFAULT_CONFIG
from .errors import PoleProximityError, PrecisionExhaustedError

TWO_PI = 2.0 * math.pi
LN_PI = math.log(math.pi)

#: Riemann-Siegel needs at least one main-sum term and the theta series
#: needs t >= ~64; below this Z always routes through Euler-Maclaurin.
RS_FLOOR_T = 64.0

#: Above this height the double-word phase budget (and table memory) runs out.
T_MAX = 1e11

#: Euler-Maclaurin oracle domain limit; cost grows linearly with t.
EM_T_MAX = 1.0e6 + 200.0

_EM_TAIL_TARGET = 1e-13

# B_{2k}/(2k)! for k = 1..16, exact rationals collapsed to binary64.
_BERNOULLI_2K = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6),
    Fraction(-3617, 510), Fraction(43867, 798), Fraction(-174611, 330),
    Fraction(854513, 138), Fraction(-236364091, 2730), Fraction(8553103, 6),
    Fraction(-23749461029, 870), Fraction(8615841276005, 14322),
    Fraction(-7709321041217, 510),
]
_EM_COEF = [float(b / Fraction(math.factorial(2 * k)))
            for k, b in enumerate(_BERNOULLI_2K, start=1)]


@dataclass(frozen=True)
class CriticalPoint:
    """One sample of Hardy's Z: ordinate, value, and theta(t) mod 2*pi."""

    t: float
    z: float
    phase: float


# ----------------------------------------------------------------------
# theta(t): the phase with chi(1/2+it) = exp(-2i*theta(t))
# ----------------------------------------------------------------------

_THETA_SWITCH = 32.0
# Asymptotic tail coefficients of theta: sum c_j * t^(1-2j), j >= 1.
_THETA_TAIL = (1.0 / 48.0, 7.0 / 5760.0, 31.0 / 80640.0, 127.0 / 430080.0)


def _theta_dd(t):
    """theta(t) for t >= _THETA_SWITCH as a double-double (before reduction).

    theta = (t/2) log(t/2pi) - t/2 - pi/8 + 1/(48t) + 7/(5760 t^3) + ...;
    the series tail below 1/(48t) is kept in plain binary64, which is ample
    since those terms never exceed ~1e-3.
    """
    t = np.asarray(t, dtype=float)
    xh, xl = dd.dd_mul_f(dd.INV_2PI_HI, dd.INV_2PI_LO, t)
    lh, ll = dd.dd_log((xh, xl))
    ah, al = dd.dd_mul_f(lh, ll, 0.5 * t)
    ah, al = dd.dd_add_f(ah, al, -0.5 * t)
    ah, al = dd.dd_add(ah, al, -dd.PI_8_HI, -dd.PI_8_LO)
    inv_t2 = 1.0 / (t * t)
    tail = _THETA_TAIL[3]
    for c in _THETA_TAIL[2::-1]:
        tail = tail * inv_t2 + c
    return dd.dd_add_f(ah, al, tail / t)


def theta(t):
    """Riemann-Siegel theta, continuous on the reals, theta(-t) = -theta(t).

    Exact log-gamma route for |t| < 32, asymptotic series above; absolute
    error is ~1e-13 or one ulp of the result, whichever is larger.
    """
    t = np.asarray(t, dtype=float)
    scalar = t.ndim == 0
    t = np.atleast_1d(t)
    out = np.empty_like(t)
    a = np.abs(t)
    small = a < _THETA_SWITCH
    if np.any(small):
        z = 0.25 + 0.5j * a[small]
        out[small] = np.imag(loggamma(z)) - 0.5 * a[small] * LN_PI
    if np.any(~small):
        h, l = _theta_dd(a[~small])
        out[~small] = h + l
    out = out * np.sign(t)
    return float(out[0]) if scalar else out


def theta_mod_2pi(t):
    """theta(t) reduced to [0, 2*pi), accurate to ~1e-15 at any |t| <= 1e11.

    This is the phase carried by :class:`CriticalPoint` and the one the
    chi/theta consistency identity is stated against.
    """
    t = np.asarray(t, dtype=float)
    scalar = t.ndim == 0
    t = np.atleast_1d(t)
    if np.any(np.abs(t) > T_MAX):
        raise PrecisionExhaustedError(
            f"phase reduction not guaranteed beyond t = {T_MAX:g}")
    out = np.empty_like(t)
    a = np.abs(t)
    small = a < RS_FLOOR_T
    if np.any(small):
        out[small] = np.mod(theta(a[small]), TWO_PI)
    if np.any(~small):
        h, l = _theta_dd(a[~small])
        m = dd.mod_2pi(h, l)
        out[~small] = np.mod(m, TWO_PI)
    neg = t < 0
    out[neg] = np.mod(-out[neg], TWO_PI)
    return float(out[0]) if scalar else out


def _theta_mod_pmpi(t):
    """theta(t) mod 2*pi mapped to (-pi, pi], vectorised, t >= RS_FLOOR_T."""
    h, l = _theta_dd(t)
    return dd.mod_2pi(h, l)


def chi_half(t):
    """chi(1/2+it) = exp(-2i*theta(t)); unimodular by construction."""
    t = np.asarray(t, dtype=float)
    scalar = t.ndim == 0
    phase = theta_mod_2pi(t)
    out = np.exp(-2j * np.asarray(phase))
    return complex(out) if scalar else out


# ----------------------------------------------------------------------
# Euler-Maclaurin oracle
# ----------------------------------------------------------------------

def _em_phases(t, n_count):
    lnh, lnl = dd.ln_table(n_count)
    return dd.phase_mod_2pi(t, lnh, lnl)


def _zeta_em_core(sigma, t, n_start, tail_target, exact_sum):
    """Euler-Maclaurin zeta(sigma + it) for t >= 0, with remainder control.

    Returns (value, bound) where bound is the explicit estimate
    |R_K| <= |B_{2K+2}/(2K+2)! (s)_{2K+1} N^{-s-2K-1}| * |s+2K+1|/(sigma+2K+1)
    for the first neglected correction term. N grows until the bound meets
    tail_target.
    """
    s = complex(sigma, t)
    K = 14
    N = n_start
    for _ in range(8):
        # remainder bound first; cheap, avoids building the big sum twice
        lnN = math.log(N)
        # log |(s)_{2K+1}| accumulated factor by factor
        la = 0.0
        for j in range(2 * K + 1):
            la += 0.5 * math.log((sigma + j) ** 2 + t * t)
        log_bound = (math.log(abs(_EM_COEF[K])) + la
                     + (-(sigma) - 2 * K - 1) * lnN
                     + 0.5 * math.log((sigma + 2 * K + 1) ** 2 + t * t)
                     - math.log(sigma + 2 * K + 1))
        if log_bound <= math.log(tail_target):
            break
        N = int(N * 1.4) + 16
    bound = math.exp(log_bound)

    n = np.arange(1, N + 1, dtype=float)
    amp = n ** (-sigma)
    if t != 0.0:
        ph = _em_phases(t, N)
        terms = amp * np.cos(ph) - 1j * (amp * np.sin(ph))
    else:
        terms = amp.astype(complex)
    if exact_sum:
        total = complex(math.fsum(terms.real), math.fsum(terms.imag))
    else:
        total = complex(np.sum(terms.real), np.sum(terms.imag))
    # exclude the n = N term from the open sum; EM uses sum_{n<N} + N^{-s}/2
    total -= terms[-1]

    if t != 0.0:
        lnNh, lnNl = dd.dd_log(float(N))
        phN = dd.phase_mod_2pi(t, lnNh, lnNl)
        N_pow_ms = (N ** -sigma) * complex(math.cos(phN), -math.sin(phN))
    else:
        N_pow_ms = complex(N ** -sigma)
    total += 0.5 * N_pow_ms
    total += N_pow_ms * N / (s - 1.0)

    # correction ladder: c_k (s)_{2k-1} N^{-s-2k+1}
    q = N_pow_ms / N
    poch = s
    corr = 0.0 + 0.0j
    for k in range(1, K + 1):
        corr += _EM_COEF[k - 1] * poch * q
        poch = poch * (s + (2 * k - 1)) * (s + 2 * k)
        q = q / (N * N)
    total += corr
    return total, bound


def zeta_em(sigma: float, t: float) -> complex:
    """High-precision zeta(sigma + it) oracle, absolute error <= 1e-12.

    Euler-Maclaurin with the remainder bound driven below 1e-13; conjugate
    symmetry handles t < 0. Raises PoleProximityError within 1e-8 of s = 1
    and PrecisionExhaustedError beyond |t| = 1e6, where the oracle's linear
    cost stops being worth paying.
    """
    sigma = float(sigma)
    t = float(t)
    if abs(complex(sigma, t) - 1.0) < 1e-8:
        raise PoleProximityError(f"zeta pole guard: s = {sigma}+{t}i")
    if abs(t) > EM_T_MAX:
        raise PrecisionExhaustedError(
            f"Euler-Maclaurin oracle limited to |t| <= {EM_T_MAX:g}")
    ta = abs(t)
    n0 = max(24, int(0.5 * ta) + 20)
    val, _ = _zeta_em_core(sigma, ta, n0, _EM_TAIL_TARGET, exact_sum=True)
    return val.conjugate() if t < 0 else val


def _zeta_em_fast(sigma: float, t: float) -> complex:
    """Relaxed-accuracy Euler-Maclaurin (abs error ~1e-8), for the
    argument-continuation audit where full oracle precision is wasted."""
    ta = abs(t)
    n0 = max(24, int(0.27 * ta) + 20)
    val, _ = _zeta_em_core(sigma, ta, n0, 1e-9, exact_sum=False)
    return val.conjugate() if t < 0 else val


def zeta_truncated(t: float, cutoff: float) -> complex:
    """Plain truncated Dirichlet sum over n <= cutoff at s = 1/2 + it.

    Error is O(cutoff^{-1/2}) only in the window cutoff <= t <= 2*cutoff;
    outside it the caller owns the interpretation.
    """
    cutoff = float(cutoff)
    if cutoff < 1:
        raise ValueError(f"cutoff must be >= 1, got {cutoff}")
    t = float(t)
    ta = abs(t)
    N = int(cutoff)
    amp = np.arange(1, N + 1, dtype=float) ** -0.5
    if ta > 0:
        ph = _em_phases(ta, N)
        val = complex(math.fsum(amp * np.cos(ph)), -math.fsum(amp * np.sin(ph)))
    else:
        val = complex(math.fsum(amp), 0.0)
    return val.conjugate() if t < 0 else val


# ----------------------------------------------------------------------
# Riemann-Siegel correction terms C_0 .. C_3
# ----------------------------------------------------------------------

def _psi(z):
    """The entire function cos(2pi(z^2 - z - 1/16))/cos(2pi z)."""
    return np.cos(TWO_PI * (z * z - z - 0.0625)) / np.cos(TWO_PI * z)


def _cj_direct(p):
    """C_0..C_3 at points p in [0, 1] via Cauchy-integral derivatives.

    The corrections are rational combinations of derivatives of _psi; each
    derivative is extracted from a 128-point trapezoid rule on a radius-0.3
    circle, which is spectrally accurate for an entire integrand. The huge
    denominators (96 pi^2 upward) make even a few hundred ulps of noise in
    the high derivatives invisible in the final terms.
    """
    p = np.atleast_1d(np.asarray(p, dtype=float))
    M, r = 128, 0.3
    phi = TWO_PI * np.arange(M) / M
    ring = r * np.exp(1j * phi)
    vals = _psi(p[:, None] + ring[None, :])

    def deriv(k):
        f = vals * np.exp(-1j * k * phi)[None, :]
        return f.mean(axis=1).real * math.factorial(k) / r ** k

    pi2 = math.pi ** 2
    d = {k: deriv(k) for k in (0, 1, 2, 3, 5, 6, 9)}
    c0 = d[0]
    c1 = -d[3] / (96 * pi2)
    c2 = d[2] / (64 * pi2) + d[6] / (18432 * pi2 ** 2)
    c3 = (-d[1] / (64 * pi2) - d[5] / (3840 * pi2 ** 2)
          - d[9] / (5308416 * pi2 ** 3))
    return np.stack([c0, c1, c2, c3])


_CHEB_DEG = 80
_cheb_coefs = None


def _cheb_tables():
    """Chebyshev models of C_0..C_3 on p in [0, 1], built once per process."""
    global _cheb_coefs
    if _cheb_coefs is None:
        from numpy.polynomial import chebyshev as C

        def make(j):
            return C.chebinterpolate(
                lambda u: _cj_direct(0.5 * (np.asarray(u) + 1.0))[j], _CHEB_DEG)

        _cheb_coefs = [make(j) for j in range(4)]
    return _cheb_coefs


def _rs_corrections(p, order):
    """Stacked C_0..C_order evaluated at p via the Chebyshev tables."""
    from numpy.polynomial.chebyshev import chebval

    u = 2.0 * np.asarray(p) - 1.0
    tabs = _cheb_tables()
    return [chebval(u, tabs[j]) for j in range(order + 1)]


# ----------------------------------------------------------------------
# Z(t)
# ----------------------------------------------------------------------

_CHUNK_ELEMS = 2_000_000


def _z_rs_batch(ts, order):
    """Riemann-Siegel Z over a 1-D array of heights >= RS_FLOOR_T."""
    tp = ts / TWO_PI
    tau = np.sqrt(tp)
    N = tau.astype(np.int64)
    p = tau - N
    th = _theta_mod_pmpi(ts)
    out = np.zeros_like(ts)

    for Nv in np.unique(N):
        sel = np.nonzero(N == Nv)[0]
        lnh, lnl = dd.ln_table(int(Nv))
        w = np.arange(1, Nv + 1, dtype=float) ** -0.5
        step = max(1, _CHUNK_ELEMS // int(Nv))
        for i in range(0, sel.size, step):
            idx = sel[i:i + step]
            tt = ts[idx][:, None]
            wh, we = dd.two_prod(tt, lnh[None, :])
            wl = we + tt * lnl[None, :]
            ph = dd.mod_2pi(wh, wl)
            args = th[idx][:, None] - ph
            out[idx] = 2.0 * (np.cos(args) * w[None, :]).sum(axis=1)

    cj = _rs_corrections(p, order)
    rem = cj[order].copy()
    rtp = np.sqrt(tp)
    for j in range(order - 1, -1, -1):
        rem = rem / rtp + cj[j]
    sign = np.where(N % 2 == 1, 1.0, -1.0)  # (-1)^(N-1)
    out += sign * tp ** -0.25 * rem
    return out


def _z_em_scalar(t):
    """Z through the Euler-Maclaurin oracle: real part of e^{i theta} zeta."""
    th = theta(t)
    z = zeta_em(0.5, t)
    return (complex(math.cos(th), math.sin(th)) * z).real


def z_eval(t, cfg: ScanConfig = DEFAULT_CONFIG):
    """Hardy's Z(t); accepts scalars or arrays, routes through |t|.

    Heights below max(cfg.em_switch_t, 64) use the Euler-Maclaurin oracle;
    above it the Riemann-Siegel sum with cfg.rs_correction_order correction
    terms. Raises PrecisionExhaustedError beyond t = 1e11 where the
    double-word phase budget runs out.
    """
    arr = np.asarray(t, dtype=float)
    scalar = arr.ndim == 0
    a = np.abs(np.atleast_1d(arr).ravel())
    if a.size and np.max(a) > T_MAX:
        raise PrecisionExhaustedError(
            f"z_eval phase accuracy not guaranteed beyond t = {T_MAX:g}")
    switch = max(cfg.em_switch_t, RS_FLOOR_T)
    out = np.empty_like(a)
    lo = a < switch
    if np.any(lo):
        out[lo] = [_z_em_scalar(x) for x in a[lo]]
    if np.any(~lo):
        hi_idx = np.nonzero(~lo)[0]
        out[hi_idx] = _z_rs_batch(a[hi_idx], int(cfg.rs_correction_order))
    if scalar:
        return float(out[0])
    return out.reshape(arr.shape)


def critical_point(t: float, cfg: ScanConfig = DEFAULT_CONFIG) -> CriticalPoint:
    """Bundle (t, Z(t), theta(t) mod 2*pi) for one ordinate."""
    return CriticalPoint(t=float(t), z=float(z_eval(t, cfg)),
                         phase=float(theta_mod_2pi(t)))
