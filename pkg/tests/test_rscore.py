"""Evaluator tests: theta, chi, the Euler-Maclaurin oracle, the truncated
sum, and Z itself, against frozen 30-digit references and each other."""

import math

import numpy as np
import pytest

from hardyz import rscore as rs
from hardyz.config import ScanConfig
from hardyz.errors import PoleProximityError, PrecisionExhaustedError

RNG = np.random.default_rng(777)

# frozen 30-digit references (independent log-gamma / zeta evaluations)
THETA_REFS = {
    10.0: -3.06707439628989529170201353481,
    100.0: 87.9721652317872196254831291138,
    1000.0: 2034.54642803803160870334515121,
}
THETA_MOD_REFS = {
    5432.125: None,  # covered via Z references below
    1000000.5: 4.5923233531157735684,
    10000000.125: 1.5387965388098634485,
    100000000.0625: 4.0561287124116632799,
}
ZETA_REFS = {
    (0.5, 0.0): complex(-1.46035450880958681288949915252, 0.0),
    (0.5, 1000.0): complex(0.356334367194396055, 0.931997831232993665),
    (1.5, 12345.625): complex(1.10779860198155729, 0.279455599880429564),
    (0.6, 100000.0): complex(1.70453872739453622, 3.54191964822733631),
    (2.5, 50000.0): complex(1.06336932512164373, 0.127276831063081709),
    (0.5, 150.0): complex(-0.0635050565486052306, -0.0651927599258052327),
}
Z_REFS = {
    777.125: 0.924537925574767609,
    1234.5625: -1.77731863328307186,
    2500.75: -1.0385173372276748,
    5432.125: 0.172909862766943079,
    50000.125: 2.70592353291375361,
    100000.25: 7.69601488675340383,
    1000000.5: -0.935580651567934673,
    10000000.125: 6.86263359789373634,
    100000000.0625: 7.68027656334626008,
}
#: theta(t) = 0 near here; root-found on a 30-digit log-gamma oracle
THETA_ZERO = 17.8455995404108608


class TestTheta:
    def test_zero_at_origin(self):
        assert rs.theta(0.0) == 0.0

    def test_odd_symmetry(self):
        assert rs.theta(-100.0) == -rs.theta(100.0)

    @pytest.mark.parametrize("t,ref", sorted(THETA_REFS.items()))
    def test_frozen_values(self, t, ref):
        assert rs.theta(t) == pytest.approx(ref, abs=1e-10)

    def test_sign_change_at_frozen_root(self):
        assert rs.theta(THETA_ZERO - 1e-5) < 0 < rs.theta(THETA_ZERO + 1e-5)
        assert rs.theta(THETA_ZERO) == pytest.approx(0.0, abs=1e-9)

    def test_route_switch_is_seamless(self):
        # log-gamma below 32, series above; they must agree at the seam
        below = rs.theta(31.999999)
        above = rs.theta(32.000001)
        slope = 0.5 * math.log(32.0 / (2 * math.pi)) - 1.0 / (48.0 * 32.0**2)
        assert above - below == pytest.approx(2e-6 * slope, abs=1e-11)

    @pytest.mark.parametrize("t,ref", [(k, v) for k, v in
                                       sorted(THETA_MOD_REFS.items())
                                       if v is not None])
    def test_mod_2pi_frozen(self, t, ref):
        assert rs.theta_mod_2pi(t) == pytest.approx(ref, abs=1e-13)

    def test_mod_vs_plain_at_moderate_height(self):
        t = 1234.5
        assert rs.theta_mod_2pi(t) == pytest.approx(
            rs.theta(t) % (2 * math.pi), abs=1e-10)


class TestChi:
    def test_unimodular(self):
        for t in (10.0, 100.0, 1000.0, 1e6):
            assert abs(abs(rs.chi_half(t)) - 1.0) <= 1e-12

    def test_chi_at_zero_is_one(self):
        assert rs.chi_half(0.0) == pytest.approx(1.0, abs=1e-14)

    def test_phase_consistency_identity(self):
        # chi(1/2+it) * e^{2i theta} = 1, both factors from the same phase
        for t in (10.0, 1000.0, 1e5, 1e8):
            prod = rs.chi_half(t) * np.exp(2j * rs.theta_mod_2pi(t))
            assert abs(prod - 1.0) <= 1e-10

    def test_direct_formula_cross_check(self):
        # chi(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) at moderate height
        from scipy.special import gamma as cgamma

        for t in (5.0, 17.25, 60.0):
            s = 0.5 + 1j * t
            direct = 2**s * np.pi**(s - 1) * np.sin(np.pi * s / 2) * cgamma(1 - s)
            assert rs.chi_half(t) == pytest.approx(direct, abs=1e-10)

    def test_asymptotic_leading_term(self):
        # (2pi/t)^(it) e^{i(t+pi/4)} carries an O(1/t) relative remainder
        t = 1000.0
        s = 0.5 + 1j * t
        lead = complex((2 * np.pi / t) ** (s - 0.5) * np.exp(1j * (t + np.pi / 4)))
        rel = abs(rs.chi_half(t) - lead) / abs(rs.chi_half(t))
        assert rel <= 1e-2
        assert rel == pytest.approx(4.1667e-5, rel=1e-2)  # measured O(1/t)


class TestZetaEM:
    def test_basel(self):
        assert rs.zeta_em(2.0, 0.0) == pytest.approx(np.pi**2 / 6, abs=1e-12)

    @pytest.mark.parametrize("key,ref", sorted(ZETA_REFS.items()))
    def test_frozen_values(self, key, ref):
        assert rs.zeta_em(*key) == pytest.approx(ref, abs=1e-12)

    def test_conjugate_symmetry(self):
        assert rs.zeta_em(0.5, -1000.0) == np.conj(rs.zeta_em(0.5, 1000.0))

    def test_first_zero_is_a_zero(self):
        assert abs(rs.zeta_em(0.5, 14.134725141734694)) <= 1e-5

    def test_pole_guard(self):
        with pytest.raises(PoleProximityError):
            rs.zeta_em(1.0, 1e-9)

    def test_height_limit(self):
        with pytest.raises(PrecisionExhaustedError):
            rs.zeta_em(0.5, 2e6)


class TestZetaTruncated:
    def test_single_term(self):
        for t in (0.0, 17.5, 12345.0):
            assert rs.zeta_truncated(t, 1.0) == 1.0

    def test_conjugation(self):
        assert rs.zeta_truncated(-321.5, 50.0) == np.conj(
            rs.zeta_truncated(321.5, 50.0))

    def test_error_constant_in_validity_window(self):
        # cutoff = 150, t in [150, 300]: difference to the oracle should be
        # O(cutoff^{-1/2}); the measured constant is recorded and bounded
        cutoff = 150.0
        ts = np.linspace(150.0, 300.0, 64)
        errs = [abs(rs.zeta_truncated(float(t), cutoff) - rs.zeta_em(0.5, float(t)))
                for t in ts]
        c = max(errs) * math.sqrt(cutoff)
        assert c <= 2.0, f"error constant c = {c:.3f} blew past its record"

    def test_cutoff_validation(self):
        with pytest.raises(ValueError):
            rs.zeta_truncated(10.0, 0.5)


class TestZEval:
    def test_evenness_exact(self, cfg):
        for t in (250.0, 1000.5, 14.2):
            assert rs.z_eval(t, cfg) == rs.z_eval(-t, cfg)

    @pytest.mark.parametrize("t,ref", sorted(Z_REFS.items()))
    def test_frozen_values_crosscheck_cfg(self, t, ref, xcfg):
        assert rs.z_eval(t, xcfg) == pytest.approx(ref, abs=1e-8)

    @pytest.mark.parametrize("t", [50.0, 500.0, 5000.0])
    def test_modulus_matches_oracle(self, t, xcfg):
        assert abs(abs(rs.z_eval(t, xcfg)) - abs(rs.zeta_em(0.5, t))) <= 1e-8

    def test_first_zero_bracketed(self, cfg):
        assert np.sign(rs.z_eval(14.0, cfg)) != np.sign(rs.z_eval(14.2, cfg))

    def test_array_shape_roundtrip(self, cfg):
        t = np.array([[100.0, 777.125], [2500.75, 50.0]])
        z = rs.z_eval(t, cfg)
        assert z.shape == t.shape
        assert z[0, 1] == pytest.approx(Z_REFS[777.125], abs=1e-7)

    def test_height_guard(self, cfg):
        with pytest.raises(PrecisionExhaustedError):
            rs.z_eval(2e11, cfg)

    def test_correction_order_convergence(self):
        # |z(order k+1) - z(order k)| must shrink with height; median over a
        # small window dodges zeros of the individual correction terms
        meds = []
        for t0 in (1e3, 1e5, 1e7):
            ts = np.linspace(t0, t0 * 1.01, 33)
            deltas = []
            for k in (1, 2):
                a = rs._z_rs_batch(ts.copy(), k)
                b = rs._z_rs_batch(ts.copy(), k + 1)
                deltas.append(np.median(np.abs(a - b)))
            meds.append(deltas)
        meds = np.array(meds)
        assert np.all(meds[1:] < meds[:-1]), f"no decay with t: {meds}"

    def test_em_and_rs_routes_agree(self):
        # the same t evaluated through both routes, by moving the switch
        em_cfg = ScanConfig(em_switch_t=2000.0, rs_correction_order=3)
        rs_cfg = ScanConfig(em_switch_t=100.0, rs_correction_order=3)
        for t in (777.125, 1234.5625):
            assert rs.z_eval(t, em_cfg) == pytest.approx(
                rs.z_eval(t, rs_cfg), abs=2e-9)

    def test_critical_point_bundle(self, cfg):
        cp = rs.critical_point(1000.5, cfg)
        assert cp.z == pytest.approx(rs.z_eval(1000.5, cfg))
        assert cp.phase == pytest.approx(rs.theta_mod_2pi(1000.5))
        assert math.isfinite(cp.z)
