"""Numerics for Hardy's Z-function on the critical line.

The package evaluates Z(t) = e^{i*theta(t)} zeta(1/2+it) by a vectorised
Riemann-Siegel sum (Euler-Maclaurin below a configurable switch height),
locates and classifies the real zeros of Z, measures how much of an
interval Z spends positive versus negative, builds the 1/sqrt(zeta)
mollifier system, integrates the mollified means that drive the sign-change
argument, and computes the pair-correlation lower-bound constant.
"""

from .config import ScanConfig, DEFAULT_CONFIG
from .errors import (
    HardyZError,
    ConfigError,
    PoleProximityError,
    PrecisionExhaustedError,
    AuditFailureError,
    AlternationError,
    DegenerateMollifierError,
)
from .rscore import (
    CriticalPoint,
    theta,
    theta_mod_2pi,
    chi_half,
    zeta_em,
    zeta_truncated,
    z_eval,
    critical_point,
)
from .zeroscan import (
    ZeroRecord,
    GapStats,
    count_audit,
    count_asymptotic,
    find_zeros,
    classify,
    gap_stats,
    n_pm_alpha,
)
from .signmeasure import MeasureReport, measure_signs, table_dyadic, table_fixed
from .mollifier import (
    CoeffTable,
    alpha_coeffs,
    beta_coeffs,
    b_coeffs,
    eval_B,
    coeff_table,
    mobius_sieve,
    divisor_count_sieve,
)
from .mollmeans import (
    QuadratureResult,
    mean_Z_B2,
    mean_absZ_B2,
    mean_Z2_B4,
    sign_split_check,
    cauchy_schwarz_check,
)
from .paircorr import (
    PairCorrResult,
    f_alpha,
    objective,
    maximize,
    lower_bound_curve,
)

__version__ = "0.1.0"

__all__ = [
    "ScanConfig", "DEFAULT_CONFIG",
    "HardyZError", "ConfigError", "PoleProximityError",
    "PrecisionExhaustedError", "AuditFailureError", "AlternationError",
    "DegenerateMollifierError",
    "CriticalPoint", "theta", "theta_mod_2pi", "chi_half", "zeta_em",
    "zeta_truncated", "z_eval", "critical_point",
    "ZeroRecord", "GapStats", "count_audit", "count_asymptotic",
    "find_zeros", "classify", "gap_stats", "n_pm_alpha",
    "MeasureReport", "measure_signs", "table_dyadic", "table_fixed",
    "CoeffTable", "alpha_coeffs", "beta_coeffs", "b_coeffs", "eval_B",
    "coeff_table", "mobius_sieve", "divisor_count_sieve",
    "QuadratureResult", "mean_Z_B2", "mean_absZ_B2", "mean_Z2_B4",
    "sign_split_check", "cauchy_schwarz_check",
    "PairCorrResult", "f_alpha", "objective", "maximize", "lower_bound_curve",
    "__version__",
]
