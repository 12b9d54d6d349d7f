"""Exception types shared across the package."""


class HardyZError(Exception):
    """Base class for domain errors raised by this package."""


class ConfigError(HardyZError, ValueError):
    """Invalid ScanConfig field or unknown configuration key."""


class PoleProximityError(HardyZError):
    """zeta requested too close to the pole at s = 1."""


class PrecisionExhaustedError(HardyZError):
    """Phase accuracy cannot be guaranteed at the requested height."""


class AuditFailureError(HardyZError):
    """Zero scan count disagrees with the counting-function audit.

    Carries the suspect subinterval so the caller can report where a close
    pair (or an evaluator problem) is hiding below grid resolution.
    """

    def __init__(self, message, t_lo=None, t_hi=None, found=None, expected=None):
        super().__init__(message)
        self.t_lo = t_lo
        self.t_hi = t_hi
        self.found = found
        self.expected = expected


class AlternationError(HardyZError):
    """Consecutive zeros classified with equal derivative signs."""


class DegenerateMollifierError(HardyZError, ValueError):
    """Mollifier length X <= 1 leaves no coefficients at all."""
