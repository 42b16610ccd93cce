"""
Rational lamination of a polynomial from numerically certified co-landings.
"""

import math
from collections import defaultdict
from functools import partial
from itertools import combinations
from typing import Dict, List, Tuple

from src.circle import Angle, orbit_info
from src.dynamics import (
    DEFAULT_SETTINGS,
    LandingResult,
    PolynomialSpec,
    TracerSettings,
    co_landing_verdict,
    land_angle,
    require_connected,
)
from src.errors import LaminationConsistencyError
from src.utils import DisjointSet, create_logger, parallel_map
from .classes import AngleClass, Lamination, check_unlinked

logger = create_logger("lamination")

Cell = Tuple[int, int]


def rational_angles(max_den: int) -> List[Angle]:
    """Every reduced angle with denominator <= max_den, in increasing order"""
    return sorted(
        Angle(num, den)
        for den in range(1, max_den + 1)
        for num in range(den)
        if math.gcd(num, den) == 1
    )


def _cell(z: complex, size: float) -> Cell:
    return (math.floor(z.real / size), math.floor(z.imag / size))


def group_landings(
    results: List[LandingResult], degree: int, settings: TracerSettings = DEFAULT_SETTINGS
) -> List[Tuple[Angle, ...]]:
    """
    Union angles whose certified landing points agree, using a grid of cells the
    size of the co-landing tolerance so only neighbouring cells are compared.

    A group whose members are not pairwise within tolerance came from a chain
    of near matches and is rejected instead of merged.
    """
    tol = settings.co_landing_tol
    landed = [r for r in results if r.landed]
    grid: Dict[Cell, List[int]] = defaultdict(list)
    groups: DisjointSet[int] = DisjointSet()

    for i, result in enumerate(landed):
        groups.add(i)
        assert result.landing_point is not None
        cx, cy = _cell(result.landing_point, tol)
        info = orbit_info(result.angle, degree)
        for dx in (-1, 0, 1):
            for dy in (-1, 0, 1):
                for j in grid.get((cx + dx, cy + dy), []):
                    other = landed[j]
                    if orbit_info(other.angle, degree) != info:
                        continue
                    if co_landing_verdict(result, other, settings):
                        groups.union(i, j)
        grid[(cx, cy)].append(i)

    angle_groups = []
    for members in groups.groups():
        for i, j in combinations(members, 2):
            if not co_landing_verdict(landed[i], landed[j], settings):
                raise LaminationConsistencyError(
                    f"Rays {landed[i].angle} and {landed[j].angle} are chained into one "
                    f"class but land {abs(landed[i].landing_point - landed[j].landing_point):.3g} apart"  # type: ignore[operator]
                )
        angle_groups.append(tuple(sorted(landed[i].angle for i in members)))
    return sorted(angle_groups)


def build_rational_lamination(
    spec: PolynomialSpec,
    max_den: int,
    depth: int = 30,
    settings: TracerSettings = DEFAULT_SETTINGS,
    workers: int = 1,
) -> Lamination:
    if max_den < 2:
        raise ValueError(f"max_den must be >= 2, got {max_den}")
    require_connected(spec, settings.connectivity_budget)

    angles = rational_angles(max_den)
    logger.lamination(f"landing {len(angles)} rays on {spec.label} at depth {depth}")
    results = parallel_map(partial(land_angle, spec, depth, settings), angles, workers)

    warnings = [
        f"{r.angle}: {r.status.value}" + (f" ({r.reason})" if r.reason else "")
        for r in results
        if not r.landed
    ]
    for warning in warnings:
        logger.warning(f"undetermined landing {warning}")

    classes = tuple(
        AngleClass(members)
        for members in group_landings(results, spec.degree, settings)
        if len(members) >= 2
    )
    lam = Lamination(spec.degree, classes, tuple(warnings))

    crossing = check_unlinked(lam)
    if not crossing:
        raise LaminationConsistencyError(
            "Co-landing classes cross: " + "; ".join(crossing.describe())
        )
    logger.success(f"{len(lam)} classes, {len(warnings)} undetermined rays")
    return lam
