import pytest
from fractions import Fraction

from src.circle import (
    ZERO,
    Angle,
    digits,
    expansion,
    format_word,
    from_periodic_digits,
    orbit_info,
    preimages,
    sigma,
    sigma_n,
)
from src.errors import AngleError


class TestAngle:
    """Test exact angle construction and parsing"""

    def test_parse_reduces(self):
        """Test that p/q is reduced and taken modulo 1"""
        assert Angle.parse("2/6") == Angle(1, 3)
        assert Angle.parse("5/3") == Angle(2, 3)
        assert Angle.parse(" 0 ") == ZERO

    @pytest.mark.parametrize("text", ["bad", "1/0", "", "1/3/4"])
    def test_parse_rejects_garbage(self, text):
        """Test that malformed angle strings raise AngleError"""
        with pytest.raises(AngleError):
            Angle.parse(text)

    def test_constructor_requires_reduced_fraction(self):
        """Test that the constructor only accepts reduced fractions in [0, 1)"""
        with pytest.raises(AngleError):
            Angle(2, 4)
        with pytest.raises(AngleError):
            Angle(3, 3)

    def test_ordering_and_str(self):
        """Test ordering, p/q formatting and construction from a Fraction"""
        assert Angle(1, 3) < Angle(1, 2) < Angle(2, 3)
        assert str(Angle(5, 12)) == "5/12"
        assert Angle.of(Fraction(7, 4)) == Angle(3, 4)


class TestAngleMap:
    """Test sigma_d and orbit bookkeeping"""

    def test_sigma(self):
        """Test multiplication by d modulo 1"""
        assert sigma(Angle(1, 3), 2) == Angle(2, 3)
        assert sigma(Angle(1, 6), 2) == Angle(1, 3)
        assert sigma(Angle(1, 4), 2) == Angle(1, 2)
        assert sigma(Angle(1, 4), 3) == Angle(3, 4)

    def test_sigma_n(self):
        """Test iterated sigma_d"""
        assert sigma_n(Angle(1, 7), 2, 3) == Angle(1, 7)
        assert sigma_n(Angle(2, 5), 2, 2) == Angle(3, 5)

    def test_preimages(self):
        """Test the d preimages in increasing order"""
        assert preimages(Angle(1, 3), 2) == (Angle(1, 6), Angle(2, 3))
        assert preimages(ZERO, 3) == (ZERO, Angle(1, 3), Angle(2, 3))

    def test_degree_must_be_at_least_two(self):
        """Test that degree 1 is rejected"""
        with pytest.raises(AngleError):
            sigma(Angle(1, 3), 1)

    @pytest.mark.parametrize(
        "angle, preperiod, period",
        [("1/3", 0, 2), ("1/6", 1, 2), ("1/4", 2, 1), ("1/7", 0, 3), ("0", 0, 1)],
    )
    def test_orbit_info(self, angle, preperiod, period):
        """Test preperiod and period under doubling"""
        info = orbit_info(Angle.parse(angle), 2)
        assert (info.preperiod, info.period) == (preperiod, period)
        assert info.is_periodic == (preperiod == 0)


class TestDigits:
    """Test base-d expansions"""

    def test_lower_expansion(self):
        """Test the standard base-d digits"""
        assert digits(Angle(1, 3), 2, 4) == (0, 1, 0, 1)
        assert digits(Angle(1, 2), 2, 3) == (1, 0, 0)

    def test_upper_expansion(self):
        """Test the expansion approaching from below"""
        assert digits(ZERO, 2, 3, upper=True) == (1, 1, 1)
        assert digits(Angle(1, 2), 2, 3, upper=True) == (0, 1, 1)
        assert digits(Angle(2, 3), 2, 2, upper=True) == (1, 0)

    def test_expansion(self):
        """Test the canonical prefix and repeating word"""
        assert expansion(Angle(1, 6), 2) == ((0,), (0, 1))
        assert expansion(Angle(1, 3), 2) == ((), (0, 1))

    def test_from_periodic_digits(self):
        """Test exact values of eventually periodic words"""
        assert from_periodic_digits((), (0, 1), 2) == Angle(1, 3)
        assert from_periodic_digits((0,), (0, 1), 2) == Angle(1, 6)
        assert from_periodic_digits((), (0, 1, 1, 0), 2) == Angle(2, 5)
        with pytest.raises(AngleError):
            from_periodic_digits((0,), (), 2)

    def test_expansion_reconstructs_angle(self):
        """Test that an angle is recovered from its own expansion"""
        for text in ["1/6", "7/12", "2/5", "3/14"]:
            a = Angle.parse(text)
            assert from_periodic_digits(*expansion(a, 2), 2) == a

    def test_format_word(self):
        """Test digit words as strings"""
        assert format_word((0, 1, 1)) == "011"
