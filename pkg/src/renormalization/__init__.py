"""
Quadratic tuning: connecting function p, its inverse nu and their checks.
"""

from .tuning import TuningData, is_in_image, tuning_nu, tuning_p
from .verification import (
    ANCHOR_MAX_DEN,
    ConnectingFunction,
    OrderCheck,
    SemiconjugacyCheck,
    StrategicReport,
    anchor_pool,
    sample_anchors,
    strategic_report,
    window_center,
    verify_order_preserving,
    verify_semiconjugacy,
)

__all__ = [
    "ANCHOR_MAX_DEN",
    "ConnectingFunction",
    "OrderCheck",
    "SemiconjugacyCheck",
    "StrategicReport",
    "TuningData",
    "anchor_pool",
    "is_in_image",
    "sample_anchors",
    "strategic_report",
    "window_center",
    "tuning_nu",
    "tuning_p",
    "verify_order_preserving",
    "verify_semiconjugacy",
]
