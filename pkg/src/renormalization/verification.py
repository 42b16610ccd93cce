"""
Exact checks of a tuning (order preservation, return-map semiconjugacy) and
the numerical strategic-placement report.
"""

from dataclasses import dataclass, field
from functools import partial
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from src.circle import Angle, in_ccw_order, orbit_info, sigma, sigma_n
from src.dynamics import (
    DEFAULT_SETTINGS,
    PolynomialSpec,
    TracerSettings,
    critical_points,
    evaluate,
    iterate,
    land,
    land_angle,
    require_connected,
)
from src.errors import AngleError
from src.lamination import rational_angles
from src.utils import create_logger, parallel_map
from .tuning import TuningData, tuning_nu, tuning_p

logger = create_logger("renormalization")

Triple = Tuple[Angle, Angle, Angle]

ANCHOR_MAX_DEN = 64
WINDOW_MARGIN = 1.05


@dataclass
class OrderCheck:
    ok: bool
    witness: Optional[Triple] = None

    def __bool__(self) -> bool:
        return self.ok


@dataclass
class SemiconjugacyCheck:
    ok: bool
    failures: List[str] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _preserves(domain: Triple, images: Triple) -> bool:
    if len(set(images)) < 3:
        return False
    return in_ccw_order(*domain) == in_ccw_order(*images)


@dataclass
class ConnectingFunction:
    """Finite restriction of p to an anchor sample"""

    domain: Tuple[Angle, ...]
    mapping: Dict[Angle, Angle]

    def __post_init__(self):
        ordered = tuple(sorted(self.domain))
        if len(set(ordered)) != len(ordered):
            raise AngleError("Connecting function domain must be pairwise distinct")
        missing = [a for a in ordered if a not in self.mapping]
        if missing:
            raise AngleError(f"No image for {', '.join(str(a) for a in missing)}")
        self.domain = ordered

    @classmethod
    def from_tuning(cls, t: TuningData, samples: Sequence[Angle]) -> "ConnectingFunction":
        return cls(tuple(samples), {a: tuning_p(t, a) for a in samples})

    def images(self) -> List[Angle]:
        return [self.mapping[a] for a in self.domain]

    def is_injective(self) -> bool:
        return len(set(self.images())) == len(self.domain)

    def order_check(self) -> OrderCheck:
        """
        Exact circular-order test over all triples of the domain.

        With the domain sorted, order is preserved iff the images are distinct and
        have at most one descent read cyclically. A failing triple is searched
        around the first two descents, then exhaustively.
        """
        domain, images = self.domain, self.images()
        m = len(domain)
        if m < 3:
            return OrderCheck(ok=True)
        descents = [i for i in range(m) if images[(i + 1) % m] < images[i]]
        if self.is_injective() and len(descents) <= 1:
            return OrderCheck(ok=True)

        candidates = sorted(
            {(i + shift) % m for i in descents[:2] for shift in (0, 1)}
            | {i for i in range(m) if images.count(images[i]) > 1}
        )
        for x, y, z in combinations(candidates, 3):
            triple = (domain[x], domain[y], domain[z])
            if not _preserves(triple, (images[x], images[y], images[z])):
                return OrderCheck(ok=False, witness=triple)
        for x, y, z in combinations(range(m), 3):
            triple = (domain[x], domain[y], domain[z])
            if not _preserves(triple, (images[x], images[y], images[z])):
                return OrderCheck(ok=False, witness=triple)
        return OrderCheck(ok=True)


def verify_order_preserving(t: TuningData, samples: Sequence[Angle]) -> OrderCheck:
    return ConnectingFunction.from_tuning(t, samples).order_check()


def verify_semiconjugacy(t: TuningData, samples: Sequence[Angle]) -> SemiconjugacyCheck:
    """nu(sigma_d^n(b)) == sigma_k(nu(b)) for every sample, in exact arithmetic"""
    failures = []
    for b in samples:
        decoded = tuning_nu(t, b)
        if decoded is None:
            failures.append(f"{b}: not in the domain of nu")
            continue
        returned = tuning_nu(t, sigma_n(b, t.d, t.n))
        expected = sigma(decoded, t.k)
        if returned != expected:
            failures.append(f"{b}: nu(sigma^{t.n}) = {returned}, sigma(nu) = {expected}")
    return SemiconjugacyCheck(ok=not failures, failures=failures)


@dataclass
class StrategicReport:
    anchor_sample: List[Angle]
    images: List[Angle]
    order_preserved: bool
    landing_agreement: float
    failures: List[str] = field(default_factory=list)
    order_witness: Optional[Triple] = None
    window_center: complex = 0j
    window_radius: float = 0.0


def anchor_pool(t: TuningData, depth: int, tail_samples: int = 4) -> List[Angle]:
    """Rational angles whose images under p are certifiable at this depth"""
    pool = []
    for a in rational_angles(ANCHOR_MAX_DEN):
        info = orbit_info(tuning_p(t, a), t.d)
        if info.preperiod + (tail_samples - 1) * info.period <= depth:
            pool.append(a)
    return pool


def sample_anchors(t: TuningData, size: int, depth: int, seed: int = 0, tail_samples: int = 4) -> List[Angle]:
    pool = anchor_pool(t, depth, tail_samples)
    rng = np.random.default_rng(seed)
    picks = rng.choice(len(pool), size=min(size, len(pool)), replace=False)
    return sorted(pool[int(i)] for i in picks)


def in_window(
    spec: PolynomialSpec, z: complex, t: TuningData, steps: int, center: complex, radius: float
) -> bool:
    """The P^n-orbit of z stays in the renormalization window for `steps` returns"""
    for _ in range(steps + 1):
        if abs(z - center) > radius:
            return False
        z = iterate(spec, z, t.n)
    return True


def window_center(spec: PolynomialSpec) -> complex:
    """
    Critical value of P. The characteristic rays theta_minus, theta_plus cut
    off the sector holding the critical value, so the small Julia set reached
    by the rays of p(a) is the piece of the renormalization cycle around it.
    """
    return evaluate(spec, critical_points(spec)[0])


def strategic_report(
    spec: PolynomialSpec,
    t: TuningData,
    sample_size: int,
    depth: int = 30,
    seed: int = 0,
    settings: TracerSettings = DEFAULT_SETTINGS,
    workers: int = 1,
) -> StrategicReport:
    """
    Sample anchors a, trace the rays of p(a) and count those landing in the
    small Julia set, taken as the points whose P^n-orbit stays in the disk
    about the critical value through the landing point of theta_minus.
    """
    require_connected(spec, settings.connectivity_budget)
    if t.d != spec.degree:
        raise ValueError(f"Tuning degree {t.d} does not match polynomial degree {spec.degree}")

    anchors = sample_anchors(t, sample_size, depth, seed, settings.tail_samples)
    images = [tuning_p(t, a) for a in anchors]
    order = verify_order_preserving(t, anchors)
    logger.tuning(f"{len(anchors)} anchors, order preserved: {order.ok}")

    center = window_center(spec)
    root = land(spec, t.theta_minus, depth, settings)
    failures: List[str] = []
    if not root.landed or root.landing_point is None:
        failures.append(f"characteristic ray {t.theta_minus} did not land: {root.status.value}")
        return StrategicReport(
            anchor_sample=anchors,
            images=images,
            order_preserved=order.ok,
            landing_agreement=0.0,
            failures=failures,
            order_witness=order.witness,
            window_center=center,
        )
    radius = abs(root.landing_point - center) * WINDOW_MARGIN

    results = parallel_map(partial(land_angle, spec, depth, settings), images, workers)
    agreeing = 0
    for a, b, result in zip(anchors, images, results):
        if not result.landed or result.landing_point is None:
            failures.append(f"{a} -> {b}: {result.status.value}")
            continue
        info = orbit_info(a, t.k)
        if not in_window(spec, result.landing_point, t, info.preperiod + info.period, center, radius):
            failures.append(f"{a} -> {b}: landing point {result.landing_point:.6g} leaves the window")
            continue
        agreeing += 1

    agreement = agreeing / len(anchors) if anchors else 0.0
    logger.tuning(f"landing agreement {agreement:.3f}")
    return StrategicReport(
        anchor_sample=anchors,
        images=images,
        order_preserved=order.ok,
        landing_agreement=agreement,
        failures=failures,
        order_witness=order.witness,
        window_center=center,
        window_radius=radius,
    )
