"""
Pullback closure: adjoin sigma_d-preimage classes level by level.

The d preimages of a class C with members c_0..c_{r-1} split into d groups, each
mapped bijectively onto C. Group g is anchored by the g-th preimage of c_0 and
takes one preimage of every other member; the choice is a permutation per
member. The grouping must be forced by unlinkedness alone.
"""

from itertools import combinations, permutations, product
from typing import Iterable, List, Set, Tuple

from src.circle import preimages
from src.errors import LaminationConsistencyError, PullbackAmbiguityError
from src.utils import create_logger
from .classes import AngleClass, Lamination, check_unlinked, classes_cross

logger = create_logger("pullback")

Grouping = Tuple[AngleClass, ...]


def candidate_groupings(cls: AngleClass, d: int) -> Iterable[Grouping]:
    lifts = [preimages(a, d) for a in cls]
    anchor, rest = lifts[0], lifts[1:]
    for choice in product(permutations(range(d)), repeat=len(rest)):
        yield tuple(
            AngleClass((anchor[g],) + tuple(lift[perm[g]] for lift, perm in zip(rest, choice)))
            for g in range(d)
        )


def _compatible(grouping: Grouping, existing: Set[AngleClass]) -> bool:
    for first, second in combinations(grouping, 2):
        if classes_cross(first, second):
            return False
    taken = {a for cls in existing for a in cls}
    for group in grouping:
        if group in existing:
            continue
        if taken.intersection(group.angles):
            return False
        if any(classes_cross(group, other) for other in existing):
            return False
    return True


def pull_back_class(cls: AngleClass, d: int, existing: Set[AngleClass], level: int) -> Grouping:
    """The unique unlinked grouping of the preimages of cls"""
    valid = [g for g in candidate_groupings(cls, d) if _compatible(g, existing)]
    if len(valid) != 1:
        options = "; ".join(" ".join(str(c) for c in g) for g in valid) or "none"
        raise PullbackAmbiguityError(
            f"Preimages of {cls} admit {len(valid)} unlinked groupings at level {level}: {options}",
            level=level,
        )
    return valid[0]


def pullback_closure(
    lam: Lamination, generators: Iterable[AngleClass], levels: int
) -> Lamination:
    """
    Lamination containing lam, the generators and `levels` rounds of their
    preimage classes.
    """
    if levels < 0:
        raise ValueError(f"levels must be >= 0, got {levels}")
    d = lam.degree
    frontier: List[AngleClass] = sorted(set(generators))
    seed = Lamination(d, tuple(set(lam.classes) | set(frontier)), lam.warnings)
    linked = check_unlinked(seed)
    if not linked:
        raise LaminationConsistencyError(
            "Pullback generators are linked: " + "; ".join(linked.describe())
        )

    existing: Set[AngleClass] = set(seed.classes)
    for level in range(1, levels + 1):
        added: List[AngleClass] = []
        for cls in frontier:
            for group in pull_back_class(cls, d, existing, level):
                if group not in existing:
                    existing.add(group)
                    added.append(group)
        logger.debug(f"level {level}: {len(added)} new classes")
        frontier = sorted(added)
        if not frontier:
            break

    return Lamination(d, tuple(existing), lam.warnings)
