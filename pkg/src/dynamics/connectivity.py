"""
Critical points and the escaping-critical-orbit test for connectedness of J(P).
"""

import cmath
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import List, Tuple

from src.errors import DisconnectedJuliaSetError
from src.utils.logger import create_logger
from .polynomial import PolynomialSpec, derivative_coefficients, escape_radius, evaluate
from .roots import aberth_roots

logger = create_logger("connectivity")


class Verdict(Enum):
    CONNECTED = "connected"
    DISCONNECTED = "disconnected"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class ConnectivityReport:
    verdict: Verdict
    escaping_critical_points: List[complex] = field(default_factory=list)
    iteration_budget_used: int = 0
    critical_points: List[complex] = field(default_factory=list)

    @property
    def is_connected(self) -> bool:
        return self.verdict is Verdict.CONNECTED


def critical_points(spec: PolynomialSpec) -> Tuple[complex, ...]:
    """Roots of P', with multiplicity, sorted by (real, imag) for determinism"""
    roots = aberth_roots(derivative_coefficients(spec))
    return tuple(sorted((complex(r) for r in roots), key=lambda z: (round(z.real, 12), round(z.imag, 12))))


def connectivity(spec: PolynomialSpec, budget: int) -> ConnectivityReport:
    """
    Iterate every critical point up to budget times; an orbit leaving the
    escape radius makes J(P) disconnected. Surviving the budget is only
    evidence of connectedness, never proof.
    """
    if budget < 1:
        raise ValueError(f"Connectivity budget must be >= 1, got {budget}")

    radius = escape_radius(spec)
    crit = critical_points(spec)
    escaping: List[complex] = []
    used = 0
    undetermined = False

    for c in crit:
        z = c
        for step in range(1, budget + 1):
            z = evaluate(spec, z)
            used = max(used, step)
            if not cmath.isfinite(z):
                undetermined = True
                break
            if abs(z) > radius:
                escaping.append(c)
                break

    if escaping:
        verdict = Verdict.DISCONNECTED
    elif undetermined:
        verdict = Verdict.UNDETERMINED
    else:
        verdict = Verdict.CONNECTED
    logger.debug(f"{spec.label}: {verdict.value} after {used} iterations")
    return ConnectivityReport(
        verdict=verdict,
        escaping_critical_points=escaping,
        iteration_budget_used=used,
        critical_points=list(crit),
    )


@lru_cache(maxsize=64)
def require_connected(spec: PolynomialSpec, budget: int = 500) -> ConnectivityReport:
    """Raise DisconnectedJuliaSetError unless the verdict is connected"""
    report = connectivity(spec, budget)
    if report.verdict is Verdict.DISCONNECTED:
        raise DisconnectedJuliaSetError(
            f"Julia set of {spec.label} is disconnected: critical orbit of "
            f"{report.escaping_critical_points[0]:.6g} escapes",
            escaping=report.escaping_critical_points,
        )
    if report.verdict is Verdict.UNDETERMINED:
        raise DisconnectedJuliaSetError(
            f"Connectivity of {spec.label} undetermined: critical orbit overflowed"
        )
    return report
