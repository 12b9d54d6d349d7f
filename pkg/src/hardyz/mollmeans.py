"""Panel quadrature of the mollified means over (T, 2T].

The integrands Z|B|^2, |Z||B|^2 and Z^2|B|^4 oscillate on the scale of the
local mean zero gap 2*pi/log(t/2pi), so panels are tied to that scale
(half a gap each, 8 Gauss-Legendre nodes per panel) and every located zero
is a panel boundary -- the kink of |Z| never sits inside a panel. Each
mean refines by halving panels until the change drops below
max(1e-6 |value|, 1e-6 T).

The sign-split identity int_{I+} Z|B|^2 = (int Z|B|^2 + int |Z||B|^2)/2
and the Cauchy-Schwarz bound int_{I+} Z|B|^2 <= sqrt(mu(I+)) *
sqrt(int Z^2 |B|^4) are wired as cross-checks over the same machinery,
each side integrated through its own refinement loop so agreement means
something.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.polynomial.legendre import leggauss

from .config import ScanConfig, DEFAULT_CONFIG
from .mollifier import CoeffTable, coeff_table, eval_B
from .rscore import TWO_PI, z_eval
from .signmeasure import _sign_segments, measure_signs
from .zeroscan import _scan

#: Advisory exponent ranges per mean; outside them the run is flagged,
#: never refused.
THETA_RANGES = {"z_b2": 0.25, "absz_b2": 0.5, "z2_b4": 0.01}

_GL_X, _GL_W = leggauss(8)
_MAX_LEVELS = 6


@dataclass(frozen=True)
class QuadratureResult:
    """One converged (or honestly non-converged) mean value."""

    value: float
    error_estimate: float
    nodes: int
    converged: bool
    T: float
    theta: float
    theta_in_range: bool = True


def _panel_edges(breaks: np.ndarray, level: int) -> tuple[np.ndarray, np.ndarray]:
    """Split each inter-break segment into half-gap panels, halved per level."""
    lefts, rights = [], []
    mids = 0.5 * (breaks[:-1] + breaks[1:])
    gap = TWO_PI / np.maximum(np.log(mids / TWO_PI), 0.9)
    width = 0.5 * gap / 2.0 ** level
    seg = breaks[1:] - breaks[:-1]
    counts = np.maximum(1, np.ceil(seg / width)).astype(int)
    for a, b, k in zip(breaks[:-1], breaks[1:], counts):
        e = np.linspace(a, b, k + 1)
        lefts.append(e[:-1])
        rights.append(e[1:])
    return np.concatenate(lefts), np.concatenate(rights)


def _quad(lefts, rights, f) -> tuple[float, int]:
    """Gauss-Legendre sum over panels; returns (integral, node count)."""
    half = 0.5 * (rights - lefts)
    mid = 0.5 * (rights + lefts)
    nodes = mid[:, None] + half[:, None] * _GL_X[None, :]
    vals = f(nodes.ravel()).reshape(nodes.shape)
    panel_sums = (vals * _GL_W[None, :]).sum(axis=1) * half
    return float(math.fsum(panel_sums)), nodes.size


def _make_integrand(kind: str, table: CoeffTable, cfg: ScanConfig):
    def f(ts):
        z = z_eval(ts, cfg)
        b2 = np.abs(eval_B(ts, table)) ** 2
        if kind == "z_b2":
            return z * b2
        if kind == "absz_b2":
            return np.abs(z) * b2
        if kind == "z2_b4":
            return z * z * b2 * b2
        raise ValueError(kind)
    return f


def _refine(breaks, f, T) -> tuple[float, float, int, bool]:
    prev = None
    delta = math.inf
    nodes_total = 0
    for level in range(_MAX_LEVELS):
        lefts, rights = _panel_edges(breaks, level)
        val, n = _quad(lefts, rights, f)
        nodes_total += n
        if prev is not None:
            delta = abs(val - prev)
            tol = max(1e-6 * abs(val), 1e-6 * T)
            if delta <= 0.5 * tol:
                return val, max(delta, 1e-12 * (1 + abs(val))), nodes_total, True
        prev = val
    return val, delta, nodes_total, False


@lru_cache(maxsize=64)
def _mean(T: float, theta: float, cfg: ScanConfig, kind: str) -> QuadratureResult:
    T, theta = float(T), float(theta)
    if T < 100:
        raise ValueError(f"T must be >= 100, got {T}")
    if theta <= 0:
        raise ValueError(f"theta must be > 0, got {theta}")
    X = T ** theta
    table = coeff_table(X, theta, with_b=False)
    records, _ = _scan(T, 2.0 * T, cfg)
    breaks = np.array([T] + [r.gamma for r in records] + [2.0 * T])
    f = _make_integrand(kind, table, cfg)
    value, err, nodes, conv = _refine(breaks, f, T)
    return QuadratureResult(value=value, error_estimate=err, nodes=nodes,
                            converged=conv, T=T, theta=theta,
                            theta_in_range=bool(theta < THETA_RANGES[kind]))


def mean_Z_B2(T: float, theta: float,
              cfg: ScanConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """int_T^{2T} Z(t) |B_X(1/2+it)|^2 dt with X = T^theta."""
    return _mean(T, theta, cfg, "z_b2")


def mean_absZ_B2(T: float, theta: float,
                 cfg: ScanConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """int_T^{2T} |Z(t)| |B_X(1/2+it)|^2 dt with X = T^theta."""
    return _mean(T, theta, cfg, "absz_b2")


def mean_Z2_B4(T: float, theta: float,
               cfg: ScanConfig = DEFAULT_CONFIG) -> QuadratureResult:
    """int_T^{2T} Z(t)^2 |B_X(1/2+it)|^4 dt with X = T^theta."""
    return _mean(T, theta, cfg, "z2_b4")


@lru_cache(maxsize=64)
def _positive_restriction(T: float, theta: float, cfg: ScanConfig):
    """Quadrature of Z|B|^2 restricted to the segments where Z > 0."""
    X = T ** theta
    table = coeff_table(X, theta, with_b=False)
    bounds, signs, _ = _sign_segments(T, T, cfg)
    f = _make_integrand("z_b2", table, cfg)
    pos = signs > 0
    sub_breaks = [np.array([bounds[i], bounds[i + 1]])
                  for i in range(len(signs)) if pos[i]]
    prev = None
    delta = math.inf
    nodes_total = 0
    for level in range(_MAX_LEVELS):
        total = 0.0
        n_lv = 0
        for br in sub_breaks:
            lefts, rights = _panel_edges(br, level)
            v, n = _quad(lefts, rights, f)
            total += v
            n_lv += n
        nodes_total += n_lv
        if prev is not None:
            delta = abs(total - prev)
            tol = max(1e-6 * abs(total), 1e-6 * T)
            if delta <= 0.5 * tol:
                return total, max(delta, 1e-12 * (1 + abs(total))), nodes_total, True
        prev = total
    return total, delta, nodes_total, False


def sign_split_check(T: float, theta: float,
                     cfg: ScanConfig = DEFAULT_CONFIG) -> dict:
    """Both sides of int_{I+} Z|B|^2 = (int Z|B|^2 + int |Z||B|^2)/2.

    An exact algebraic identity; the reported difference is a direct read
    of the combined quadrature error.
    """
    lhs, lhs_err, lhs_nodes, lhs_conv = _positive_restriction(T, theta, cfg)
    m1 = mean_Z_B2(T, theta, cfg)
    m2 = mean_absZ_B2(T, theta, cfg)
    rhs = 0.5 * (m1.value + m2.value)
    combined = lhs_err + 0.5 * (m1.error_estimate + m2.error_estimate)
    diff = lhs - rhs
    return {
        "T": T, "theta": theta, "X": T ** theta,
        "lhs_positive_part": lhs, "rhs_half_sum": rhs,
        "difference": diff, "combined_error": combined,
        "ok": bool(abs(diff) <= combined),
        "converged": bool(lhs_conv and m1.converged and m2.converged),
        "nodes": int(lhs_nodes + m1.nodes + m2.nodes),
    }


def cauchy_schwarz_check(T: float, theta: float,
                         cfg: ScanConfig = DEFAULT_CONFIG) -> dict:
    """int_{I+} Z|B|^2 <= sqrt(mu(I+(T,T))) * sqrt(int Z^2|B|^4), with slack.

    Failure would indicate numerical error, never mathematics.
    """
    lhs, lhs_err, _, lhs_conv = _positive_restriction(T, theta, cfg)
    mu = measure_signs(T, T, cfg).mu_plus
    m4 = mean_Z2_B4(T, theta, cfg)
    rhs = math.sqrt(mu) * math.sqrt(max(m4.value, 0.0))
    slack = rhs - lhs
    return {
        "T": T, "theta": theta, "X": T ** theta,
        "lhs_positive_part": lhs, "mu_plus": mu,
        "fourth_power_mean": m4.value, "rhs_bound": rhs,
        "slack": slack, "slack_factor": rhs / lhs if lhs != 0 else math.inf,
        "ok": bool(lhs <= rhs + lhs_err + m4.error_estimate),
        "converged": bool(lhs_conv and m4.converged),
    }
