"""The pair-correlation density, its integral f, and the lower-bound
constant.

Everything downstream of the conjectured density 1 - (sin pi u / pi u)^2:
the cumulative f(alpha), the objective G(A) = int_0^A (1/2 - f), the
maximizing A* (slightly above 0.951, where f crosses 1/2) with
G(A*) = 0.32909..., and the per-alpha lower-bound curve for the counts of
classified zeros with a long following gap.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

TWO_PI_E = 2.0 * math.pi * math.e


@dataclass(frozen=True)
class PairCorrResult:
    """Maximizer output: A*, G(A*), and f samples for plotting."""

    A_star: float
    G_star: float
    f_samples: np.ndarray  # shape (n, 2): columns alpha, f(alpha)
    quadrature_tol: float


def _density(u):
    s = np.sinc(u)  # sin(pi u)/(pi u), exact at 0
    return 1.0 - s * s


def f_alpha(alpha: float, tol: float = 1e-10) -> float:
    """f(alpha) = int_0^alpha [1 - (sin pi u / pi u)^2] du, abs error <= tol.

    The integrand extends continuously by 0 at u = 0 (np.sinc handles the
    removable point), so plain adaptive quadrature applies; long ranges are
    integrated period by period to keep the oscillation resolved.
    """
    alpha = float(alpha)
    if alpha < 0:
        raise ValueError(f"alpha must be >= 0, got {alpha}")
    if tol <= 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    if alpha == 0.0:
        return 0.0
    edges = np.arange(0.0, alpha, 2.0)
    edges = np.append(edges, alpha)
    parts = 0.0
    per = tol / len(edges)
    for a, b in zip(edges[:-1], edges[1:]):
        val, _ = quad(_density, a, b, epsabs=per, limit=200)
        parts += val
    return parts


def objective(A: float, tol: float = 1e-9) -> float:
    """G(A) = int_0^A (1/2 - f(alpha)) d alpha to absolute error <= tol."""
    A = float(A)
    if A < 0:
        raise ValueError(f"A must be >= 0, got {A}")
    if A == 0.0:
        return 0.0
    inner = tol / (4.0 * max(A, 1.0))
    val, _ = quad(lambda a: 0.5 - f_alpha(a, inner), 0.0, A,
                  epsabs=tol / 2.0, limit=200)
    return val


def maximize(tol: float = 1e-8) -> PairCorrResult:
    """Locate the maximum of G via its first-order condition f(A) = 1/2.

    f is strictly increasing (positive integrand), f(0) = 0 < 1/2 and
    f(1.5) > 1/2, so the root is bracketed; bisection/Brent beats poking at
    the flat top of G directly.
    """
    if tol <= 0:
        raise ValueError(f"tol must be > 0, got {tol}")
    ftol = min(tol * 1e-2, 1e-10)
    a_star = brentq(lambda a: f_alpha(a, ftol) - 0.5, 0.5, 1.5,
                    xtol=min(tol, 1e-12))
    g_star = objective(a_star, tol)
    alphas = np.linspace(0.0, 2.0, 201)
    samples = np.column_stack([alphas,
                               [f_alpha(a, 1e-10) for a in alphas]])
    return PairCorrResult(A_star=float(a_star), G_star=float(g_star),
                          f_samples=samples, quadrature_tol=float(tol))


def lower_bound_curve(alpha_grid, T: float):
    """Per-alpha lower bound max(0, 1/2 - f(alpha)) * (T/2pi) log(T/2pi).

    Uses the smooth asymptotic count, which overshoots the true N(T) at
    desk heights; empirical comparisons should rescale by the actual zero
    count (see the acceptance suite).
    """
    T = float(T)
    if T <= TWO_PI_E:
        raise ValueError(f"T must exceed 2*pi*e, got {T}")
    n_asym = T / (2 * math.pi) * math.log(T / (2 * math.pi))
    out = []
    for a in alpha_grid:
        bound = max(0.0, 0.5 - f_alpha(float(a), 1e-10)) * n_asym
        out.append((float(a), bound))
    return out
