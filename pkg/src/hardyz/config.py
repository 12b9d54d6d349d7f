"""Evaluator precision knobs shared by every scanning operation."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConfigError

#: Highest implemented Riemann-Siegel correction index (terms C_0 .. C_3).
MAX_RS_ORDER = 3


@dataclass(frozen=True)
class ScanConfig:
    """Precision and grid-density settings for Z evaluation and zero scans.

    rs_correction_order: highest Riemann-Siegel correction term used, i.e.
        order k keeps C_0 .. C_k of the remainder expansion (1 <= k <= 3).
    em_switch_t: below this height Z is evaluated through the
        Euler-Maclaurin oracle instead of the Riemann-Siegel sum.
    bisection_tol: absolute t-width to which each zero bracket is bisected.
    samples_per_mean_gap: initial grid density, in samples per local mean
        zero gap 2*pi/log(t/2*pi).
    """

    rs_correction_order: int = 2
    em_switch_t: float = 500.0
    bisection_tol: float = 1e-9
    samples_per_mean_gap: float = 4.0

    def __post_init__(self):
        if not (1 <= int(self.rs_correction_order) <= MAX_RS_ORDER):
            raise ConfigError(
                f"rs_correction_order must be in 1..{MAX_RS_ORDER}, "
                f"got {self.rs_correction_order}"
            )
        if not self.em_switch_t > 0:
            raise ConfigError(f"em_switch_t must be > 0, got {self.em_switch_t}")
        if not self.bisection_tol > 0:
            raise ConfigError(f"bisection_tol must be > 0, got {self.bisection_tol}")
        if not self.samples_per_mean_gap >= 2:
            raise ConfigError(
                f"samples_per_mean_gap must be >= 2, got {self.samples_per_mean_gap}"
            )

    def with_updates(self, **kw) -> "ScanConfig":
        from dataclasses import replace

        return replace(self, **kw)


DEFAULT_CONFIG = ScanConfig()

#: Settings for oracle-grade cross checks: every correction term, and the
#: Euler-Maclaurin route up to a height where the four-term Riemann-Siegel
#: remainder bound 0.031 * t**(-9/4) sits near 2e-9, well under the 1e-8
#: the evaluator criterion demands.
CROSSCHECK_CONFIG = ScanConfig(rs_correction_order=3, em_switch_t=1500.0)
