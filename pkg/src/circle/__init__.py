"""
Exact circle arithmetic: rational angles, the angle map, digit expansions and
circular order.
"""

from .angles import (
    ZERO,
    Angle,
    DigitWord,
    OrbitInfo,
    digits,
    expansion,
    format_word,
    from_periodic_digits,
    orbit_info,
    preimages,
    sigma,
    sigma_n,
)
from .order import Chord, in_ccw_order, in_open_arc, leaves_cross

__all__ = [
    "ZERO",
    "Angle",
    "Chord",
    "DigitWord",
    "OrbitInfo",
    "digits",
    "expansion",
    "format_word",
    "from_periodic_digits",
    "in_ccw_order",
    "in_open_arc",
    "leaves_cross",
    "orbit_info",
    "preimages",
    "sigma",
    "sigma_n",
]
