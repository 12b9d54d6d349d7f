"""Zero location, classification, completeness audit, and gap statistics.

The scan samples Z on a grid tied to the local mean zero gap
2*pi/log(t/2pi), bisects every sign change, and audits the count against
the zero-counting function N(t) = theta(t)/pi + 1 + S(t). The S(t) term
matters: rounding theta/pi + 1 alone silently miscounts whenever |S| > 1/2
(it does at t = 500, 10000 and 1e8, all heights this package must scan),
so S is computed by continuing arg zeta(sigma+it) from sigma = 2.5 down to
the critical line -- Euler-Maclaurin values on the way down for moderate t,
a two-sum approximate functional equation above 1.2e6 where the oracle is
too slow. This is a completeness audit, not a rigorous verification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from functools import lru_cache

import numpy as np

from . import ddmath as dd
from .config import ScanConfig, DEFAULT_CONFIG
from .errors import AlternationError, AuditFailureError
from .rscore import (
    TWO_PI,
    theta,
    theta_mod_2pi,
    z_eval,
    _zeta_em_fast,
    _theta_mod_pmpi,
)

#: No zeros below the first ordinate; the counting reference is pinned to 0.
FIRST_ZERO = 14.134725141734694

#: Above this height the audit's arg-continuation switches from
#: Euler-Maclaurin values to the approximate functional equation.
_EM_AUDIT_MAX = 1.2e6

_SAMPLES_CAP = 64.0
_MAX_REFINES = 4
_CHUNK_TARGET = 1500


@dataclass(frozen=True)
class ZeroRecord:
    """A localized zero of Z with its bracket and derivative-sign class."""

    gamma: float
    bracket_width: float
    derivative_sign: str | None
    index_in_scan: int


@dataclass(frozen=True)
class GapStats:
    """Nearest-neighbour gap statistics against the pair-correlation density.

    normalized_gaps uses the local density log(gamma/2pi)/2pi per gap, which
    is what makes the sample mean sit at 1; the all_pairs fields carry the
    honest all-pairs correlation count over the same window, since the
    conjectured density is about all pairs, not nearest neighbours.
    """

    normalized_gaps: np.ndarray
    histogram: np.ndarray
    predicted: np.ndarray
    bin_edges: np.ndarray
    all_pairs: np.ndarray
    all_pairs_predicted: np.ndarray


# ----------------------------------------------------------------------
# Counting audit: N(t) through the argument principle
# ----------------------------------------------------------------------

def _zeta_afe(sigma: float, t: float) -> complex:
    """Two-sum approximate functional equation, for the audit path only.

    zeta(s) ~ sum_{n<=m} n^-s + chi(s) sum_{n<=m} n^{s-1} with
    m = floor(sqrt(t/2pi)) and chi(sigma+it) ~ (2pi/t)^(sigma-1/2) e^{-2i theta}.
    Error is O(t^{-sigma/2}); plenty for tracking an argument."""
    m = int(math.sqrt(t / TWO_PI))
    lnh, lnl = dd.ln_table(m)
    ph = dd.phase_mod_2pi(t, lnh, lnl)
    n = np.arange(1, m + 1, dtype=float)
    e = np.cos(ph) - 1j * np.sin(ph)
    s1 = complex(np.sum(n ** -sigma * e.real), np.sum(n ** -sigma * e.imag))
    s2 = complex(np.sum(n ** (sigma - 1) * e.real),
                 -np.sum(n ** (sigma - 1) * e.imag))
    thm = float(_theta_mod_pmpi(np.atleast_1d(t))[0])
    chi = (TWO_PI / t) ** (sigma - 0.5) * complex(math.cos(2 * thm),
                                                  -math.sin(2 * thm))
    return s1 + chi * s2


def _arg_continuation(t: float, zfun, sigma_last: float) -> float:
    """Continued arg zeta(sigma+it) from sigma=2.5 down to sigma_last.

    At sigma = 2.5 the Dirichlet series keeps zeta inside |w - 1| < 0.35,
    so the principal argument there equals the continuation from sigma
    = +infinity. Walking down, each step adds the principal argument of the
    ratio of consecutive values; the grid is refined until the total is
    stable and no single step jumps by more than ~0.6*pi.
    """
    v0 = zfun(2.5, t)
    acc0 = math.atan2(v0.imag, v0.real)
    prev_total = None
    m = 12
    while m <= 768:
        sig = np.linspace(2.5, sigma_last, m + 1)[1:]
        vals = [zfun(float(s), t) for s in sig]
        acc = acc0
        max_jump = 0.0
        v = v0
        for w in vals:
            d = math.atan2((w / v).imag, (w / v).real)
            max_jump = max(max_jump, abs(d))
            acc += d
            v = w
        if (prev_total is not None and abs(acc - prev_total) < 0.15
                and max_jump < 0.6 * math.pi):
            return acc
        prev_total = acc
        m *= 2
    raise AuditFailureError(
        f"argument continuation did not stabilise at t = {t}", t_lo=t, t_hi=t)


def _s_continued(t: float) -> float:
    """S(t) = arg zeta(1/2+it)/pi by continuation plus a Z-snapped last hop.

    The continuation stops just off the line (where the evaluators are
    trustworthy); on the line the argument is exactly -theta(t) mod pi with
    the residue fixed by the sign of Z, so the final hop only has to choose
    the right 2*pi branch.
    """
    if t <= _EM_AUDIT_MAX:
        zfun = (lambda s, tt: _zeta_em_fast(s, tt))
    else:
        zfun = _zeta_afe

    thm = theta_mod_2pi(t)
    z = z_eval(t)
    target0 = -thm + (0.0 if z > 0 else math.pi)
    # walk closer to the line until the branch snap is unambiguous
    for sigma_last in (0.62, 0.55):
        arg_off = _arg_continuation(t, zfun, sigma_last)
        k = round((arg_off - target0) / TWO_PI)
        arg_line = target0 + TWO_PI * k
        if abs(arg_line - arg_off) <= 0.62 * math.pi:
            return arg_line / math.pi
    if abs(arg_line - arg_off) <= 0.85 * math.pi:
        return arg_line / math.pi
    raise AuditFailureError(
        f"line-snap residual too large at t = {t}", t_lo=t, t_hi=t)


@lru_cache(maxsize=4096)
def _n_exact(t: float) -> int:
    """Zeros with ordinate in (0, t], via N = theta/pi + 1 + S."""
    if t < FIRST_ZERO:
        return 0
    x = theta(t) / math.pi + 1.0 + _s_continued(t)
    n = round(x)
    if abs(x - n) > 0.22:
        raise AuditFailureError(
            f"counting reference off-integer by {x - n:+.3f} at t = {t}",
            t_lo=t, t_hi=t)
    return int(n)


def count_audit(t0: float, t1: float) -> int:
    """Expected zero count on (t0, t1], the reference every scan must hit."""
    t0, t1 = float(t0), float(t1)
    if not (0 < t0 <= t1):
        raise ValueError(f"need 0 < t0 <= t1, got ({t0}, {t1})")
    if t0 == t1:
        return 0
    return _n_exact(t1) - _n_exact(t0)


def count_asymptotic(T: float) -> float:
    """The smooth (T/2pi) log(T/2pi) approximation to N(T), for reporting."""
    T = float(T)
    return T / TWO_PI * math.log(T / TWO_PI)


# ----------------------------------------------------------------------
# Grid construction and bracket bisection
# ----------------------------------------------------------------------

def _grid(a: float, b: float, samples: float) -> np.ndarray:
    """Strictly increasing grid over [a, b] with ~samples points per local
    mean gap; the log density changes slowly, so it is rebuilt blockwise."""
    pts = [np.array([a])]
    cur = a
    while cur < b:
        lg = max(math.log(max(cur, 1.0) / TWO_PI), 0.9)
        st0 = TWO_PI / lg / samples
        span = min(b - cur, max(0.02 * cur, 64.0 * st0))
        lg2 = max(math.log((cur + span) / TWO_PI), 0.9)
        st = TWO_PI / lg2 / samples
        k = max(1, int(math.ceil(span / st)))
        block = cur + st * np.arange(1, k + 1)
        pts.append(block[block < b])
        cur = cur + st * k
    pts.append(np.array([b]))
    return np.concatenate(pts)


def _bisect_brackets(lo, hi, slo, cfg: ScanConfig):
    """Vector bisection of sign-change brackets down to cfg.bisection_tol."""
    lo = lo.copy()
    hi = hi.copy()
    slo = slo.copy()
    for _ in range(80):
        width = hi - lo
        if not np.any(width > cfg.bisection_tol):
            break
        mid = 0.5 * (lo + hi)
        zm = z_eval(mid, cfg)
        sm = np.sign(zm)
        exact = sm == 0.0
        same = (sm == slo) & ~exact
        lo = np.where(same, mid, lo)
        hi = np.where(same, hi, mid)
        hi = np.where(exact, mid, hi)
        lo = np.where(exact, mid, lo)
    return 0.5 * (lo + hi), hi - lo


def _scan_chunk(a: float, b: float, expected: int, cfg: ScanConfig):
    """Scan one chunk at growing density until the bracket count matches."""
    attempts = 0
    for attempt in range(_MAX_REFINES + 1):
        attempts = attempt
        samples = min(cfg.samples_per_mean_gap * 2 ** attempt, _SAMPLES_CAP)
        g = _grid(a, b, samples)
        z = z_eval(g, cfg)
        s = np.sign(z)
        exact = np.nonzero(s == 0.0)[0]
        ok = s != 0.0
        gi = np.nonzero(ok)[0]
        flips = np.nonzero(np.diff(s[gi]) != 0)[0]
        # discard flips that straddle an exact-zero node: already recorded
        li, ri = gi[flips], gi[flips + 1]
        keep = ri - li == 1
        n_found = int(keep.sum()) + exact.size
        if n_found == expected:
            gam, wid = _bisect_brackets(
                g[li[keep]], g[ri[keep]], s[li[keep]], cfg)
            gammas = np.concatenate([gam, g[exact]])
            widths = np.concatenate([wid, np.zeros(exact.size)])
            order = np.argsort(gammas)
            return gammas[order], widths[order], attempts
        if samples >= _SAMPLES_CAP:
            break
    # localize the most suspicious stretch for the diagnostics
    if n_found >= 2:
        gam, _ = _bisect_brackets(g[li[keep]], g[ri[keep]], s[li[keep]], cfg)
        gam = np.sort(np.concatenate([gam, g[exact]]))
        dtheta = np.diff(theta(gam)) / math.pi
        j = int(np.argmax(np.abs(dtheta - 1.0)))
        t_lo, t_hi = float(gam[j]), float(gam[j + 1])
    else:
        t_lo, t_hi = a, b
    raise AuditFailureError(
        f"scan of ({a:g}, {b:g}] found {n_found} zeros, audit expects "
        f"{expected}; suspect subinterval ({t_lo:g}, {t_hi:g})",
        t_lo=t_lo, t_hi=t_hi, found=n_found, expected=expected)


@lru_cache(maxsize=64)
def _scan(t0: float, t1: float, cfg: ScanConfig):
    """Audited scan of (t0, t1]; returns (records, meta) with records a
    tuple of unclassified ZeroRecord sorted ascending."""
    if not (0 < t0 < t1):
        raise ValueError(f"need 0 < t0 < t1, got ({t0}, {t1})")
    expected_total = count_audit(t0, t1)
    n_chunks = max(1, math.ceil(expected_total / _CHUNK_TARGET))
    bounds = np.linspace(t0, t1, n_chunks + 1)
    gammas, widths = [], []
    refinements = 0
    for i in range(n_chunks):
        a, b = float(bounds[i]), float(bounds[i + 1])
        exp_c = count_audit(a, b) if n_chunks > 1 else expected_total
        gam, wid, att = _scan_chunk(a, b, exp_c, cfg)
        refinements = max(refinements, att)
        gammas.append(gam)
        widths.append(wid)
    gam = np.concatenate(gammas)
    wid = np.concatenate(widths)
    if gam.size != expected_total or np.any(np.diff(gam) <= 0):
        raise AuditFailureError(
            f"chunk merge lost zeros on ({t0:g}, {t1:g}]",
            t_lo=t0, t_hi=t1, found=int(gam.size), expected=expected_total)
    records = tuple(
        ZeroRecord(gamma=float(g), bracket_width=float(w),
                   derivative_sign=None, index_in_scan=i)
        for i, (g, w) in enumerate(zip(gam, wid)))
    meta = {"expected": expected_total, "refinements": refinements,
            "audit_ok": True}
    return records, meta


def find_zeros(t0: float, t1: float,
               cfg: ScanConfig = DEFAULT_CONFIG) -> list[ZeroRecord]:
    """All zeros of Z on (t0, t1], sorted, each bracketed to bisection_tol.

    The count must match count_audit; on mismatch the grid density doubles
    up to four times before AuditFailureError surfaces with the suspect
    subinterval.
    """
    records, _ = _scan(float(t0), float(t1), cfg)
    return list(records)


def classify(zeros, cfg: ScanConfig = DEFAULT_CONFIG) -> list[ZeroRecord]:
    """Set derivative_sign from the sign of Z just above each zero.

    The forward offset is max(bracket_width, 1e-7); consecutive signs must
    alternate or AlternationError is raised (a violation means a multiple
    zero or a missed one, never something to smooth over).
    """
    zs = list(zeros)
    if not zs:
        return []
    gam = np.array([r.gamma for r in zs])
    if np.any(np.diff(gam) <= 0):
        raise ValueError("zeros must be sorted strictly ascending")
    eps = np.maximum(np.array([r.bracket_width for r in zs]), 1e-7)
    za = z_eval(gam + eps, cfg)
    if np.any(za == 0.0):
        raise AlternationError("Z vanished at a classification offset")
    signs = np.where(za > 0, "+", "-")
    flips = signs[:-1] != signs[1:]
    if not np.all(flips):
        j = int(np.nonzero(~flips)[0][0])
        raise AlternationError(
            f"derivative signs fail to alternate between gamma = "
            f"{gam[j]:.9f} and {gam[j + 1]:.9f}")
    return [replace(r, derivative_sign=str(s)) for r, s in zip(zs, signs)]


# ----------------------------------------------------------------------
# Gap statistics
# ----------------------------------------------------------------------

def gap_stats(zeros, T: float, bins: int, B: float) -> GapStats:
    """Histogram of normalized nearest-neighbour gaps with the
    1 - (sin pi u / pi u)^2 prediction attached per bin.

    B must cover the observed maximum normalized gap (use the observed max;
    no a-priori bound is available), so that every gap lands in a bin.
    """
    from .paircorr import f_alpha

    gam = np.array([r.gamma for r in zeros], dtype=float)
    if gam.size < 2:
        raise ValueError("need at least two zeros for gap statistics")
    if bins < 1 or B <= 0:
        raise ValueError("need bins >= 1 and B > 0")
    g = np.diff(gam)
    ell = np.log(gam[:-1] / TWO_PI) / TWO_PI
    u = g * ell
    if float(np.max(u)) > B:
        raise ValueError(
            f"B = {B} is below the observed max normalized gap "
            f"{float(np.max(u)):.4f}")
    hist, edges = np.histogram(u, bins=bins, range=(0.0, B))
    fa = np.array([f_alpha(e, 1e-10) for e in edges])
    predicted = u.size * np.diff(fa)

    # all-pairs count over the same window, diagonal excluded
    ap = np.zeros(bins, dtype=np.int64)
    j_hi = 0
    for i in range(gam.size):
        limit = gam[i] + B / (math.log(gam[i] / TWO_PI) / TWO_PI)
        j_hi = max(j_hi, i + 1)
        while j_hi < gam.size and gam[j_hi] <= limit:
            j_hi += 1
        d = (gam[i + 1:j_hi] - gam[i]) * (math.log(gam[i] / TWO_PI) / TWO_PI)
        if d.size:
            ap += np.histogram(d, bins=bins, range=(0.0, B))[0]
    all_pairs_predicted = gam.size * np.diff(fa)
    return GapStats(normalized_gaps=u, histogram=hist, predicted=predicted,
                    bin_edges=edges, all_pairs=ap,
                    all_pairs_predicted=all_pairs_predicted)


def n_pm_alpha(zeros, T: float, alpha: float) -> tuple[int, int]:
    """Counts of '+' and '-' classified zeros whose following gap exceeds
    2*pi*alpha/log(T); the last zero has no following gap and never counts."""
    zs = list(zeros)
    if any(r.derivative_sign is None for r in zs):
        raise ValueError("zeros must be classified first")
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    thr = TWO_PI * alpha / math.log(T)
    n_plus = n_minus = 0
    for r, r_next in zip(zs[:-1], zs[1:]):
        if r_next.gamma - r.gamma > thr:
            if r.derivative_sign == "+":
                n_plus += 1
            else:
                n_minus += 1
    return n_plus, n_minus
