"""
Rational laminations: co-landing classes, pullbacks and validity checks.
"""

from .builder import build_rational_lamination, group_landings, rational_angles
from .classes import (
    AngleClass,
    CheckResult,
    Lamination,
    check_invariant,
    check_unlinked,
    classes_cross,
)
from .pullback import pullback_closure

__all__ = [
    "AngleClass",
    "CheckResult",
    "Lamination",
    "build_rational_lamination",
    "check_invariant",
    "check_unlinked",
    "classes_cross",
    "group_landings",
    "pullback_closure",
    "rational_angles",
]
