"""
Polynomial dynamics: evaluation, critical orbits, external rays and landing.
"""

from .connectivity import (
    ConnectivityReport,
    Verdict,
    connectivity,
    critical_points,
    require_connected,
)
from .landing import (
    LandingResult,
    LandingStatus,
    PeriodicCertificate,
    certify,
    co_land,
    co_landing_verdict,
    land,
    land_angle,
)
from .polynomial import (
    MultiplierKind,
    PolynomialSpec,
    classify_multiplier,
    derivative,
    escape_counts,
    escape_radius,
    evaluate,
    iterate,
    iterate_with_derivative,
    multiplier,
)
from .rays import DEFAULT_SETTINGS, RayTrace, TracerSettings, TraceStatus, trace_ray

__all__ = [
    "DEFAULT_SETTINGS",
    "ConnectivityReport",
    "LandingResult",
    "LandingStatus",
    "MultiplierKind",
    "PeriodicCertificate",
    "PolynomialSpec",
    "RayTrace",
    "TraceStatus",
    "TracerSettings",
    "Verdict",
    "certify",
    "classify_multiplier",
    "co_land",
    "co_landing_verdict",
    "connectivity",
    "critical_points",
    "derivative",
    "escape_counts",
    "escape_radius",
    "evaluate",
    "iterate",
    "iterate_with_derivative",
    "land",
    "land_angle",
    "multiplier",
    "require_connected",
    "trace_ray",
]
