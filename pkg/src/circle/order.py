"""
Circular order and chord crossing on the circle.

Counterclockwise is the direction of increasing angle.
"""

from fractions import Fraction
from typing import Tuple

from src.errors import AngleError
from .angles import Angle

Chord = Tuple[Angle, Angle]


def _ccw_distance(a: Angle, b: Angle) -> Fraction:
    return (b.value - a.value) % 1


def in_ccw_order(a: Angle, b: Angle, c: Angle) -> bool:
    """True iff moving counterclockwise from a one meets b before c"""
    if a == b or b == c or a == c:
        raise AngleError(f"Circular order needs distinct angles, got {a}, {b}, {c}")
    return _ccw_distance(a, b) < _ccw_distance(a, c)


def in_open_arc(x: Angle, start: Angle, end: Angle) -> bool:
    """True iff x lies strictly inside the counterclockwise arc (start, end)"""
    if x == start or x == end:
        return False
    if start == end:
        return True
    return _ccw_distance(start, x) < _ccw_distance(start, end)


def leaves_cross(p: Chord, q: Chord) -> bool:
    """True iff the chords p and q meet inside the open disk"""
    a, b = p
    c, e = q
    if a == b or c == e:
        return False
    if {a, b} & {c, e}:
        return False
    return in_open_arc(c, a, b) != in_open_arc(e, a, b)
