"""
External ray tracing by Newton pullback from the Böttcher coordinate.

A ray point at potential t and angle a is a solution of P^m(z) = w, where w
approximates the inverse Böttcher map at potential d^m * t and angle d^m * a.
Near infinity that inverse is w = exp(d^m t + 2 pi i d^m a) - a_{d-1}/d, so m is
chosen as the smallest number of levels lifting t above the start potential.
Each Newton solve is seeded from the previous ray point, which keeps the trace
on the branch of the ray instead of jumping to a sibling preimage.
"""

import cmath
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional

from src.circle import Angle
from src.utils.logger import create_logger
from .connectivity import require_connected
from .polynomial import PolynomialSpec, escape_radius, iterate_with_derivative
from .roots import newton

logger = create_logger("rays")


@dataclass(frozen=True)
class TracerSettings:
    """Numerical knobs shared by tracing, landing and co-landing"""

    newton_tol: float = 1e-12
    max_newton_iter: int = 100
    substeps: int = 8
    start_power: int = 4
    landing_tol: float = 1e-6
    co_landing_tol: float = 1e-6
    certification_tol: float = 1e-9
    tail_samples: int = 4
    connectivity_budget: int = 500

    def __post_init__(self):
        if self.substeps < 1:
            raise ValueError(f"substeps must be >= 1, got {self.substeps}")
        if self.start_power < 1:
            raise ValueError(f"start_power must be >= 1, got {self.start_power}")
        if self.tail_samples < 2:
            raise ValueError(f"tail_samples must be >= 2, got {self.tail_samples}")
        for name in ("newton_tol", "landing_tol", "co_landing_tol", "certification_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")

    def as_dict(self) -> dict:
        return {
            "newton_tol": self.newton_tol,
            "max_newton_iter": self.max_newton_iter,
            "substeps": self.substeps,
            "start_power": self.start_power,
            "landing_tol": self.landing_tol,
            "co_landing_tol": self.co_landing_tol,
            "certification_tol": self.certification_tol,
            "tail_samples": self.tail_samples,
            "connectivity_budget": self.connectivity_budget,
        }


DEFAULT_SETTINGS = TracerSettings()


class TraceStatus(Enum):
    COMPLETE = "complete"
    TRUNCATED_NUMERIC = "truncated_numeric"


@dataclass
class RayTrace:
    angle: Angle
    points: List[complex] = field(default_factory=list)
    potentials: List[float] = field(default_factory=list)
    depth: int = 0
    substeps: int = 8
    status: TraceStatus = TraceStatus.COMPLETE
    failure: Optional[str] = None

    @property
    def complete(self) -> bool:
        return self.status is TraceStatus.COMPLETE

    @property
    def levels_reached(self) -> int:
        """Number of whole potential levels below the start that were traced"""
        return (len(self.points) - 1) // self.substeps if self.points else -1

    def level_points(self) -> List[complex]:
        """Points at whole levels: index k has potential start / d^k"""
        return self.points[:: self.substeps]


def start_potential(spec: PolynomialSpec, settings: TracerSettings = DEFAULT_SETTINGS) -> float:
    return settings.start_power * math.log(escape_radius(spec))


def _target(
    spec: PolynomialSpec, a: Angle, level: int, lift: float, g0: float
) -> complex:
    d = spec.degree
    turns = Fraction(a.num * d**level, a.den) % 1
    modulus = math.exp(g0 * d**lift)
    shift = spec.coefficients[1] / d
    return modulus * cmath.exp(2j * math.pi * float(turns)) - shift


def trace_ray(
    spec: PolynomialSpec,
    a: Angle,
    depth: int,
    settings: TracerSettings = DEFAULT_SETTINGS,
) -> RayTrace:
    """
    Trace the external ray of angle a down depth potential levels.

    Raises DisconnectedJuliaSetError for polynomials whose critical orbits escape.
    Newton failure stops the trace early with status truncated_numeric.
    """
    if depth < 1:
        raise ValueError(f"Trace depth must be >= 1, got {depth}")
    require_connected(spec, settings.connectivity_budget)

    d = spec.degree
    s = settings.substeps
    g0 = start_potential(spec, settings)
    trace = RayTrace(angle=a, depth=depth, substeps=s)

    z = _target(spec, a, 0, 0.0, g0)
    trace.points.append(z)
    trace.potentials.append(g0)

    for j in range(1, depth * s + 1):
        level = -(-j // s)
        lift = level - j / s
        w = _target(spec, a, level, lift, g0)

        def residual(x: complex, m: int = level, target: complex = w):
            value, deriv = iterate_with_derivative(spec, x, m)
            return value - target, deriv

        result = newton(
            residual,
            z,
            tolerance=settings.newton_tol,
            max_iterations=settings.max_newton_iter,
            residual_scale=abs(w),
        )
        if not result.converged:
            trace.status = TraceStatus.TRUNCATED_NUMERIC
            trace.failure = f"Newton did not converge at level {level}, substep {j % s}"
            logger.debug(f"ray {a} on {spec.label}: {trace.failure}")
            break
        z = result.root
        trace.points.append(z)
        trace.potentials.append(g0 * d ** (-j / s))

    logger.debug(
        f"ray {a} on {spec.label}: {len(trace.points)} points, {trace.status.value}"
    )
    return trace
