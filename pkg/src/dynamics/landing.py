"""
Landing certification for rational external rays and the co-landing relation.

A (pre)periodic ray of period n is certified when the whole-level tail of its
periodic image, sampled every n levels, contracts geometrically onto a
repelling fixed point of P^n at the rate the multiplier predicts. The landing
point of the ray itself is then the preimage of that fixed point under
P^preperiod nearest the last trace point.
"""

import sys
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional

from src.circle import Angle, orbit_info
from src.errors import AngleError, UndeterminedLandingError
from src.utils.logger import create_logger
from .polynomial import (
    MultiplierKind,
    PolynomialSpec,
    classify_multiplier,
    iterate,
    iterate_with_derivative,
)
from .rays import DEFAULT_SETTINGS, RayTrace, TracerSettings, trace_ray
from .roots import newton

logger = create_logger("landing")

_RESOLUTION = 64 * sys.float_info.epsilon


class LandingStatus(Enum):
    LANDED = "landed"
    TRUNCATED_BUDGET = "truncated_budget"
    TRUNCATED_NUMERIC = "truncated_numeric"


@dataclass(frozen=True)
class PeriodicCertificate:
    preperiod: int
    period: int
    point: complex
    periodic_point: complex
    multiplier: complex
    kind: MultiplierKind


@dataclass
class LandingResult:
    trace: RayTrace
    status: LandingStatus
    landing_point: Optional[complex] = None
    certified_periodic: Optional[PeriodicCertificate] = None
    reason: Optional[str] = None

    @property
    def angle(self) -> Angle:
        return self.trace.angle

    @property
    def landed(self) -> bool:
        return self.status is LandingStatus.LANDED


def _solve(func, seed: complex, settings: TracerSettings) -> Optional[complex]:
    result = newton(func, seed, settings.newton_tol, settings.max_newton_iter)
    return result.root if result.converged else None


def _contracts(distances: List[float], bound: float, scale: float) -> bool:
    floor = _RESOLUTION * max(1.0, scale)
    return all(
        after <= max(floor, bound * before)
        for before, after in zip(distances, distances[1:])
    )


def land(
    spec: PolynomialSpec,
    a: Angle,
    depth: int = 30,
    settings: TracerSettings = DEFAULT_SETTINGS,
) -> LandingResult:
    trace = trace_ray(spec, a, depth, settings)
    return certify(spec, trace, settings)


def certify(
    spec: PolynomialSpec,
    trace: RayTrace,
    settings: TracerSettings = DEFAULT_SETTINGS,
) -> LandingResult:
    """
    Decide landing from an existing trace.

    A numerically truncated trace may still certify from the levels it reached;
    near endpoints like +-2 for z^2-2 the ray runs below double resolution long
    before the requested depth.
    """
    info = orbit_info(trace.angle, spec.degree)
    pre, n = info.preperiod, info.period
    levels = trace.level_points()
    last = len(levels) - 1
    failed = (
        LandingStatus.TRUNCATED_BUDGET if trace.complete else LandingStatus.TRUNCATED_NUMERIC
    )

    def give_up(reason: str) -> LandingResult:
        logger.debug(f"ray {trace.angle}: {failed.value} ({reason})")
        return LandingResult(trace=trace, status=failed, reason=reason)

    samples = [last - i * n for i in range(settings.tail_samples)][::-1]
    if samples[0] < pre:
        return give_up(
            f"{last} levels traced, need {pre + (settings.tail_samples - 1) * n} "
            f"for preperiod {pre} and period {n}"
        )

    tail = [iterate(spec, levels[k], pre) for k in samples]

    def fixed_point_residual(y: complex):
        value, deriv = iterate_with_derivative(spec, y, n)
        return value - y, deriv - 1

    periodic_point = _solve(fixed_point_residual, tail[-1], settings)
    if periodic_point is None:
        return give_up(f"Newton on P^{n}(z) = z did not converge")
    multiplier = iterate_with_derivative(spec, periodic_point, n)[1]
    kind = classify_multiplier(multiplier)

    if kind is MultiplierKind.REPELLING:
        bound = (1 + 1 / abs(multiplier)) / 2
        distances = [abs(y - periodic_point) for y in tail]
        if not _contracts(distances, bound, abs(periodic_point)):
            return give_up(
                f"tail does not contract onto {periodic_point:.6g} "
                f"(multiplier modulus {abs(multiplier):.4g})"
            )
    elif kind is MultiplierKind.PARABOLIC:
        if abs(tail[-1] - tail[-2]) > settings.landing_tol:
            return give_up("parabolic approach not within landing tolerance at this depth")
    else:
        return give_up(f"nearest fixed point of P^{n} is {kind.value}")

    point = periodic_point
    if pre > 0:

        def preimage_residual(z: complex):
            value, deriv = iterate_with_derivative(spec, z, pre)
            return value - periodic_point, deriv

        point = _solve(preimage_residual, levels[last], settings)
        if point is None:
            return give_up(f"Newton on P^{pre}(z) = landing point did not converge")
        distances = [abs(levels[k] - point) for k in samples]
        if not _contracts(distances, 1.0, abs(point)):
            return give_up(f"trace does not approach preimage {point:.6g}")

    mismatch = abs(iterate(spec, point, pre + n) - iterate(spec, point, pre))
    if mismatch >= settings.certification_tol:
        return give_up(f"certificate residual {mismatch:.3g} too large")

    logger.debug(f"ray {trace.angle}: landed at {point:.9g}")
    return LandingResult(
        trace=trace,
        status=LandingStatus.LANDED,
        landing_point=point,
        certified_periodic=PeriodicCertificate(
            preperiod=pre,
            period=n,
            point=point,
            periodic_point=periodic_point,
            multiplier=multiplier,
            kind=kind,
        ),
    )


def co_landing_verdict(
    first: LandingResult,
    second: LandingResult,
    settings: TracerSettings = DEFAULT_SETTINGS,
) -> bool:
    """Compare two landings; a truncated one leaves the relation undetermined"""
    for result in (first, second):
        if not result.landed:
            raise UndeterminedLandingError(
                f"Ray {result.angle} did not land: {result.status.value}"
                + (f" ({result.reason})" if result.reason else "")
            )
    assert first.landing_point is not None and second.landing_point is not None
    return abs(first.landing_point - second.landing_point) <= settings.co_landing_tol


def co_land(
    spec: PolynomialSpec,
    a: Angle,
    b: Angle,
    depth: int = 30,
    settings: TracerSettings = DEFAULT_SETTINGS,
) -> bool:
    """
    True iff the rays of angles a and b land at the same point.

    Angles with different preperiod or period never co-land and are rejected
    without tracing. Raises UndeterminedLandingError when either ray is truncated.
    """
    if a == b:
        raise AngleError(f"co_land needs two distinct angles, got {a} twice")
    d = spec.degree
    if orbit_info(a, d) != orbit_info(b, d):
        return False
    return co_landing_verdict(
        land(spec, a, depth, settings), land(spec, b, depth, settings), settings
    )


def land_angle(
    spec: PolynomialSpec, depth: int, settings: TracerSettings, a: Angle
) -> LandingResult:
    """land() with the angle last, for functools.partial fan-out"""
    return land(spec, a, depth, settings)
