"""
Exception hierarchy shared by every lamina component.

The CLI maps these onto exit codes, see src/core/cli.py.
"""


class LaminaError(Exception):
    """Base class for all lamina errors"""


class AngleError(LaminaError, ValueError):
    """Malformed angle or a circular-order query on non-distinct angles"""


class PolynomialParseError(LaminaError, ValueError):
    """Polynomial description could not be parsed or is not monic of degree >= 2"""


class CriticalPointError(LaminaError):
    """Simultaneous root iteration on P' did not converge"""


class DisconnectedJuliaSetError(LaminaError):
    """Operation requires a connected Julia set but a critical orbit escaped"""

    def __init__(self, message: str, escaping: list[complex] | None = None):
        super().__init__(message)
        self.escaping = escaping or []


class UndeterminedLandingError(LaminaError):
    """A landing needed for a co-landing verdict was truncated"""


class LaminationConsistencyError(LaminaError):
    """Co-landing data does not form a valid lamination"""


class PullbackAmbiguityError(LaminaError):
    """Preimage grouping is not determined by unlinkedness"""

    def __init__(self, message: str, level: int):
        super().__init__(message)
        self.level = level


class TuningError(LaminaError, ValueError):
    """Tuning data is malformed or unsupported"""


class TuningConsistencyError(LaminaError):
    """Transported model clashes with the ambient lamination"""
