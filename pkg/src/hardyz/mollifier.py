"""The 1/sqrt(zeta) mollifier system: alpha, beta, b(m), and B_X(1/2+it).

alpha_nu are the Dirichlet coefficients of 1/sqrt(zeta): multiplicative,
with prime-power values given by the binomial series of (1-x)^(1/2), so
alpha_p = -1/2, alpha_{p^2} = -1/8, ... Squaring the series recovers the
Moebius function, which is the cross-check the test suite leans on:
(alpha * alpha)(n) = mu(n) exactly.

beta_nu = alpha_nu (1 - log nu / log X) taper the polynomial to length X;
b(m) = sum_{d|m} beta_d beta_{m/d} are the coefficients of B_X(s)^2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import ddmath as dd
from .errors import DegenerateMollifierError

_TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class CoeffTable:
    """Mollifier coefficients for one length X (optionally X = T^theta)."""

    X: float
    theta: float
    alpha: np.ndarray  # alpha[nu-1] = alpha_nu, nu = 1..floor(X)
    beta: np.ndarray
    b: np.ndarray      # b[m-1] = b(m), m = 1..floor(X)^2


def mobius_sieve(N: int) -> np.ndarray:
    """mu(1..N) by a linear sieve over smallest prime factors."""
    N = int(N)
    mu = np.ones(N + 1, dtype=np.int64)
    spf = np.zeros(N + 1, dtype=np.int64)
    primes = []
    for i in range(2, N + 1):
        if spf[i] == 0:
            spf[i] = i
            primes.append(i)
            mu[i] = -1
        for p in primes:
            if p > spf[i] or i * p > N:
                break
            spf[i * p] = p
            mu[i * p] = 0 if i % p == 0 else -mu[i]
    return mu[1:]


def divisor_count_sieve(N: int) -> np.ndarray:
    """d(1..N) by strided accumulation."""
    N = int(N)
    out = np.zeros(N, dtype=np.int64)
    for d in range(1, N + 1):
        out[d - 1::d] += 1
    return out


def _binomial_half(kmax: int) -> list[float]:
    """Coefficients of (1-x)^(1/2): c_0 = 1, c_k = c_{k-1} (k - 3/2)/k."""
    c = [1.0]
    for k in range(1, kmax + 1):
        c.append(c[-1] * (k - 1.5) / k)
    return c


def alpha_coeffs(N: int) -> np.ndarray:
    """alpha_1..alpha_N, the Dirichlet coefficients of 1/sqrt(zeta).

    Built multiplicatively: factor each n over prime powers and multiply
    the (1-x)^(1/2) series values. All prime-power values are dyadic
    rationals, exactly representable, so the sieve is exact in binary64
    up to the products' round-off (~1e-16 relative).
    """
    N = int(N)
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    kmax = max(1, int(math.log2(N)) + 1)
    c = _binomial_half(kmax)
    alpha = np.ones(N + 1, dtype=float)
    sieved = np.zeros(N + 1, dtype=bool)
    for p in range(2, N + 1):
        if sieved[p]:
            continue
        # p is prime: multiply alpha[m] by c_k for each p^k || m
        pk = p
        k = 1
        while pk <= N:
            step = pk * p
            # indices with exactly p^k: multiples of p^k not of p^(k+1)
            idx = np.arange(pk, N + 1, pk)
            if step <= N:
                idx = idx[idx % step != 0]
            alpha[idx] *= c[k]
            pk = step
            k += 1
        if p * p <= N:
            sieved[p * p::p] = True
    return alpha[1:]


def beta_coeffs(X: float) -> np.ndarray:
    """beta_nu = alpha_nu (1 - log nu / log X) for 1 <= nu <= X.

    |beta_nu| <= 1 always, since |alpha_nu| <= 1 (multiplicative with
    prime-power values in [-1/2, 1]) and the taper sits in [0, 1].
    """
    X = float(X)
    if X <= 1.0:
        raise DegenerateMollifierError(
            f"mollifier length X must exceed 1, got {X}")
    n = int(X)
    alpha = alpha_coeffs(n)
    taper = 1.0 - np.log(np.arange(1, n + 1, dtype=float)) / math.log(X)
    return alpha * taper


def coeff_table(X: float, theta: float = float("nan"),
                with_b: bool = True) -> CoeffTable:
    """Assemble the full coefficient table for mollifier length X."""
    beta = beta_coeffs(X)
    n = beta.size
    alpha = alpha_coeffs(n)
    b = _b_from_beta(beta) if with_b else np.empty(0)
    return CoeffTable(X=float(X), theta=float(theta),
                      alpha=alpha, beta=beta, b=b)


def _b_from_beta(beta: np.ndarray) -> np.ndarray:
    n = beta.size
    b = np.zeros(n * n, dtype=float)
    for d in range(1, n + 1):
        m = d * np.arange(1, n + 1)
        b[m - 1] += beta[d - 1] * beta
    return b


def b_coeffs(table: CoeffTable) -> np.ndarray:
    """b(m) = sum_{d|m} beta_d beta_{m/d} for m <= floor(X)^2."""
    if table.b.size:
        return table.b
    return _b_from_beta(table.beta)


def eval_B(t, table: CoeffTable):
    """B_X(1/2 + it) = sum beta_nu nu^{-1/2 - it}; scalar or array t.

    Phases go through the same double-word reduction as the Z evaluator,
    so the polynomial stays trustworthy at the heights where Z does.
    """
    arr = np.asarray(t, dtype=float)
    scalar = arr.ndim == 0
    ts = np.atleast_1d(arr).ravel()
    n = table.beta.size
    w = table.beta * np.arange(1, n + 1, dtype=float) ** -0.5
    lnh, lnl = dd.ln_table(n)
    out = np.empty(ts.size, dtype=complex)
    step = max(1, 2_000_000 // max(n, 1))
    for i in range(0, ts.size, step):
        tt = ts[i:i + step][:, None]
        wh, we = dd.two_prod(tt, lnh[None, :])
        ph = dd.mod_2pi(wh, we + tt * lnl[None, :])
        # e^{-i t log nu}; negative t conjugates automatically via ph
        out[i:i + step] = ((np.cos(ph) * w).sum(axis=1)
                           - 1j * (np.sin(ph) * w).sum(axis=1))
    if scalar:
        return complex(out[0])
    return out.reshape(arr.shape)
