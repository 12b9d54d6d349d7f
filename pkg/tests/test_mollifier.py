"""Mollifier coefficient system: the two independent alpha routes, the
exact convolution identity, and the bounds the tapering guarantees."""

import math

import numpy as np
import pytest

from hardyz import mollifier as mo
from hardyz.errors import DegenerateMollifierError


def alpha_by_direct_solver(N):
    """Independent oracle: solve (a * a)(n) = mu(n) coefficient by
    coefficient; no multiplicativity, no binomial series."""
    mu = mo.mobius_sieve(N)
    a = np.zeros(N + 1)
    a[1] = 1.0
    for n in range(2, N + 1):
        s = sum(a[d] * a[n // d] for d in range(2, n) if n % d == 0)
        a[n] = (mu[n - 1] - s) / 2.0
    return a[1:]


def dirichlet_square(a):
    N = a.size
    out = np.zeros(N)
    for d in range(1, N + 1):
        m = d * np.arange(1, N // d + 1)
        out[m - 1] += a[d - 1] * a[: N // d]
    return out


class TestSieves:
    def test_mobius_small(self):
        assert list(mo.mobius_sieve(12)) == [1, -1, -1, 0, -1, 1,
                                             -1, 0, 0, 1, -1, 0]

    def test_mobius_squarefree_squares(self):
        mu = mo.mobius_sieve(10**4)
        n = np.arange(1, 10**4 + 1)
        assert np.all(mu[(n % 4 == 0) | (n % 9 == 0) | (n % 25 == 0)] == 0)

    def test_divisor_count(self):
        assert list(mo.divisor_count_sieve(12)) == [1, 2, 2, 3, 2, 4,
                                                    2, 4, 3, 4, 2, 6]


class TestAlpha:
    def test_leading_coefficient(self):
        assert mo.alpha_coeffs(1)[0] == 1.0

    def test_known_values(self):
        a = mo.alpha_coeffs(8)
        assert a[1] == -0.5          # alpha_2
        assert a[3] == -0.125        # alpha_4
        assert a[5] == 0.25          # alpha_6 = alpha_2 alpha_3
        assert a[7] == -0.0625       # alpha_8

    def test_against_direct_solver(self):
        N = 300
        assert np.array_equal(mo.alpha_coeffs(N), alpha_by_direct_solver(N))

    def test_convolution_identity_to_1e4(self):
        N = 10**4
        a = mo.alpha_coeffs(N)
        conv = dirichlet_square(a)
        mu = mo.mobius_sieve(N)
        assert np.max(np.abs(conv - mu)) <= 1e-12

    def test_multiplicativity_spot(self):
        a = mo.alpha_coeffs(1000)
        for m, n in ((2, 3), (4, 9), (5, 7), (8, 27), (11, 13), (25, 31)):
            assert a[m * n - 1] == pytest.approx(a[m - 1] * a[n - 1], abs=1e-15)


class TestBeta:
    def test_beta_1_is_one(self):
        assert mo.beta_coeffs(10.0)[0] == 1.0

    def test_x4_beta2(self):
        assert mo.beta_coeffs(4.0)[1] == pytest.approx(-0.25, abs=1e-15)

    def test_integer_x_kills_last(self):
        assert mo.beta_coeffs(64.0)[-1] == 0.0

    def test_bounded_by_one(self):
        for X in (10.0, 99.5, 1000.0):
            assert np.max(np.abs(mo.beta_coeffs(X))) <= 1.0

    def test_non_integer_length(self):
        assert mo.beta_coeffs(10.7).size == 10

    def test_degenerate_rejected(self):
        with pytest.raises(DegenerateMollifierError):
            mo.beta_coeffs(1.0)


@pytest.fixture(scope="module")
def table100():
    return mo.coeff_table(100.0)


class TestB:
    def test_b1(self, table100):
        assert table100.b[0] == 1.0

    def test_b2_by_hand(self, table100):
        beta = table100.beta
        assert table100.b[1] == pytest.approx(2 * beta[0] * beta[1], abs=1e-15)

    def test_divisor_bound(self, table100):
        d = mo.divisor_count_sieve(table100.b.size)
        assert np.all(np.abs(table100.b) <= d + 1e-12)

    def test_b_coeffs_recompute(self, table100):
        fresh = mo.coeff_table(100.0, with_b=False)
        assert np.array_equal(mo.b_coeffs(fresh), table100.b)


class TestEvalB:
    def test_short_polynomial_is_constant_one(self):
        t = mo.coeff_table(1.5, with_b=False)
        for x in (0.0, 17.0, 1e4):
            assert mo.eval_B(x, t) == 1.0 + 0.0j

    def test_conjugate_symmetry(self):
        t = mo.coeff_table(50.0, with_b=False)
        z = mo.eval_B(321.0625, t)
        assert mo.eval_B(-321.0625, t) == np.conj(z)

    def test_triangle_inequality(self):
        t = mo.coeff_table(50.0, with_b=False)
        nu = np.arange(1, t.beta.size + 1)
        bound = np.sum(np.abs(t.beta) / np.sqrt(nu))
        for x in (0.0, 17.0, 1e4):
            assert abs(mo.eval_B(x, t)) <= bound + 1e-12

    def test_blocked_summation_agrees(self):
        # reordered / per-term summation of the same polynomial
        t = mo.coeff_table(200.0, with_b=False)
        x = 12345.5
        nu = np.arange(1, t.beta.size + 1, dtype=float)
        direct = complex(
            math.fsum(t.beta * nu**-0.5 * np.cos(x * np.log(nu))),
            -math.fsum(t.beta * nu**-0.5 * np.sin(x * np.log(nu))))
        assert mo.eval_B(x, t) == pytest.approx(direct, abs=1e-9)

    def test_vectorised_matches_scalar(self):
        t = mo.coeff_table(30.0, with_b=False)
        xs = np.array([10.0, 100.0, 1000.0])
        vec = mo.eval_B(xs, t)
        assert all(vec[i] == mo.eval_B(float(xs[i]), t) for i in range(3))
