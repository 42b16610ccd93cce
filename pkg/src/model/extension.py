"""
Transport of a small model into the ambient lamination through a tuning.
"""

from typing import List

from src.circle import sigma_n
from src.errors import TuningConsistencyError, TuningError
from src.lamination import AngleClass, Lamination, check_invariant, check_unlinked
from src.renormalization import TuningData, is_in_image, tuning_nu, tuning_p
from src.utils import DisjointSet, create_logger

logger = create_logger("extension")


def transported_classes(sub_lam: Lamination, t: TuningData) -> List[AngleClass]:
    """p-images of the leaves of sub_lam and their sigma_d-images along the n-cycle"""
    result = []
    for cls in sub_lam.classes:
        if len(cls) < 2:
            continue
        image = AngleClass(tuple(tuning_p(t, a) for a in cls))
        result.append(image)
        for j in range(1, t.n):
            forward = AngleClass(tuple(sigma_n(a, t.d, j) for a in image))
            if len(forward) >= 2:
                result.append(forward)
    return result


def extend_model(sub_lam: Lamination, t: TuningData, ambient: Lamination) -> Lamination:
    """
    Ambient lamination enlarged by the transported small model.

    Classes sharing an angle are merged. The result must stay unlinked and
    sigma_d-invariant, otherwise the tuning data contradicts the ambient leaves.
    """
    if sub_lam.degree != t.k:
        raise TuningError(f"Sub-lamination has degree {sub_lam.degree}, tuning expects {t.k}")
    if ambient.degree != t.d:
        raise TuningError(f"Ambient lamination has degree {ambient.degree}, tuning expects {t.d}")
    linked = check_unlinked(ambient)
    if not linked:
        raise TuningConsistencyError("Ambient leaves cross: " + "; ".join(linked.describe()))

    merged = DisjointSet()
    for cls in list(ambient.classes) + transported_classes(sub_lam, t):
        first = cls.smallest
        merged.add(first)
        for a in cls:
            merged.union(first, a)
    result = Lamination(
        t.d, tuple(AngleClass(group) for group in merged.groups()), ambient.warnings
    )

    crossing = check_unlinked(result)
    if not crossing:
        raise TuningConsistencyError(
            "Transported classes cross ambient leaves: " + "; ".join(crossing.describe())
        )
    invariance = check_invariant(result)
    if not invariance:
        raise TuningConsistencyError(
            "Extended lamination is not invariant: "
            + "; ".join(f"{c} maps to {image}" for c, image in invariance.violations)
        )
    logger.tuning(f"extended {len(ambient)} ambient classes to {len(result)}")
    return result


def restrict_to_tuning_image(lam: Lamination, t: TuningData) -> Lamination:
    """Decode through nu the part of lam lying in the image of p"""
    classes = []
    for cls in lam.classes:
        decoded = [tuning_nu(t, b) for b in cls if is_in_image(t, b)]
        kept = AngleClass(tuple(a for a in decoded if a is not None)) if decoded else None
        if kept is not None and len(kept) >= 2:
            classes.append(kept)
    return Lamination(t.k, tuple(classes))
