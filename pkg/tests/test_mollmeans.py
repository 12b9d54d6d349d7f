"""Mollified-mean quadrature: self-convergence against doubled resolution,
the triangle and sign-split identities, and Cauchy-Schwarz."""

import numpy as np
import pytest

from hardyz import mollmeans as mm
from hardyz.config import ScanConfig
from hardyz.rscore import z_eval
from hardyz.zeroscan import _scan


@pytest.fixture(scope="module")
def m_1000_02(cfg):
    return {
        "z": mm.mean_Z_B2(1000.0, 0.2, cfg),
        "abs": mm.mean_absZ_B2(1000.0, 0.2, cfg),
        "sq": mm.mean_Z2_B4(1000.0, 0.2, cfg),
    }


class TestMeans:
    def test_converged_with_estimates(self, m_1000_02):
        for q in m_1000_02.values():
            assert q.converged
            assert q.error_estimate >= 0
            assert q.nodes > 0

    def test_triangle_domination(self, m_1000_02):
        assert abs(m_1000_02["z"].value) <= m_1000_02["abs"].value

    def test_nonnegativity(self, m_1000_02):
        assert m_1000_02["abs"].value >= 0
        assert m_1000_02["sq"].value >= 0

    def test_theta_range_flags(self, m_1000_02, cfg):
        assert m_1000_02["z"].theta_in_range          # 0.2 < 1/4
        assert m_1000_02["abs"].theta_in_range        # 0.2 < 1/2
        assert not m_1000_02["sq"].theta_in_range     # 0.2 >= 1/100

    def test_degenerate_mollifier_reduces_to_plain_moment(self, cfg):
        # X = T^theta < 2 leaves only the nu = 1 term: B is identically 1
        theta = 0.05  # 1000^0.05 = 1.41
        q = mm.mean_Z_B2(1000.0, theta, cfg)
        records, _ = _scan(1000.0, 2000.0, cfg)
        breaks = np.array([1000.0] + [r.gamma for r in records] + [2000.0])
        plain, _, _, _ = mm._refine(breaks, lambda ts: z_eval(ts, cfg), 1000.0)
        assert q.value == pytest.approx(plain, abs=1e-5)

    def test_self_convergence_oracle(self, cfg):
        # doubled-resolution run agrees within combined error estimates
        q = mm.mean_Z_B2(1000.0, 0.2, cfg)
        records, _ = _scan(1000.0, 2000.0, cfg)
        breaks = np.array([1000.0] + [r.gamma for r in records] + [2000.0])
        f = mm._make_integrand(
            "z_b2", __import__("hardyz.mollifier", fromlist=["coeff_table"])
            .coeff_table(1000.0**0.2, 0.2, with_b=False), cfg)
        lefts, rights = mm._panel_edges(breaks, 3)
        fine, _ = mm._quad(lefts, rights, f)
        assert abs(q.value - fine) <= 10 * max(q.error_estimate, 1e-9)

    def test_validation(self, cfg):
        with pytest.raises(ValueError):
            mm.mean_Z_B2(50.0, 0.2, cfg)
        with pytest.raises(ValueError):
            mm.mean_Z_B2(1000.0, -0.1, cfg)


class TestChecks:
    @pytest.mark.parametrize("T,theta", [(1000.0, 0.2), (1000.0, 0.05)])
    def test_sign_split_identity(self, T, theta, cfg):
        rep = mm.sign_split_check(T, theta, cfg)
        assert rep["ok"]
        assert abs(rep["difference"]) <= rep["combined_error"]

    @pytest.mark.parametrize("T,theta", [(1000.0, 0.2), (1000.0, 0.05)])
    def test_cauchy_schwarz(self, T, theta, cfg):
        rep = mm.cauchy_schwarz_check(T, theta, cfg)
        assert rep["ok"]
        assert rep["slack_factor"] >= 1.0
