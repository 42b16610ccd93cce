import pytest

from src.circle import Angle, in_ccw_order, in_open_arc, leaves_cross
from src.errors import AngleError


def a(text: str) -> Angle:
    return Angle.parse(text)


class TestCircularOrder:
    """Test exact circular order on the circle"""

    def test_in_ccw_order(self):
        """Test counterclockwise order of three angles"""
        assert in_ccw_order(a("0"), a("1/4"), a("1/2"))
        assert not in_ccw_order(a("0"), a("1/2"), a("1/4"))

    def test_order_wraps_through_zero(self):
        """Test order across angle 0"""
        assert in_ccw_order(a("3/4"), a("0"), a("1/4"))

    def test_order_is_cyclic(self):
        """Test invariance under cyclic rotation of the arguments"""
        assert in_ccw_order(a("1/4"), a("1/2"), a("0"))

    def test_repeated_angles_rejected(self):
        """Test that non-distinct angles raise AngleError"""
        with pytest.raises(AngleError):
            in_ccw_order(a("0"), a("0"), a("1/2"))

    def test_open_arc(self):
        """Test membership in an open counterclockwise arc"""
        assert in_open_arc(a("1/3"), a("1/4"), a("1/2"))
        assert not in_open_arc(a("1/4"), a("1/4"), a("1/2"))
        assert in_open_arc(a("0"), a("3/4"), a("1/4"))


class TestLeavesCross:
    """Test chord crossing in the open disk"""

    def test_crossing_chords(self):
        """Test linked chords"""
        assert leaves_cross((a("1/12"), a("5/12")), (a("1/3"), a("2/3")))

    def test_nested_chords(self):
        """Test that nested chords do not cross"""
        assert not leaves_cross((a("1/12"), a("11/12")), (a("1/3"), a("2/3")))

    def test_shared_endpoint(self):
        """Test that chords meeting on the circle do not cross"""
        assert not leaves_cross((a("1/7"), a("2/7")), (a("2/7"), a("4/7")))

    def test_symmetry(self):
        """Test that crossing does not depend on argument order"""
        p, q = (a("1/5"), a("3/5")), (a("2/5"), a("4/5"))
        assert leaves_cross(p, q) == leaves_cross(q, p) is True
