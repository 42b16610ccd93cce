"""
Exact rational angles on the circle R/Z and the degree-d angle map.

Angles are reduced fractions num/den in [0, 1). No floating point is used here:
circular order and digit expansions must be exact.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache, total_ordering
from math import gcd
from typing import Tuple

from src.errors import AngleError

DigitWord = Tuple[int, ...]


@total_ordering
@dataclass(frozen=True)
class Angle:
    """A point num/den of the circle, counterclockwise from angle 0"""

    num: int
    den: int

    def __post_init__(self):
        if self.den <= 0:
            raise AngleError(f"Angle denominator must be positive, got {self.den}")
        if not 0 <= self.num < self.den:
            raise AngleError(f"Angle {self.num}/{self.den} is outside [0, 1)")
        if gcd(self.num, self.den) != 1:
            raise AngleError(f"Angle {self.num}/{self.den} is not reduced")

    @classmethod
    def of(cls, value: Fraction | int) -> "Angle":
        """Reduce any rational modulo 1"""
        frac = Fraction(value) % 1
        return cls(frac.numerator, frac.denominator)

    @classmethod
    def parse(cls, text: str) -> "Angle":
        """Parse "p/q" (or a bare integer); the value is reduced modulo 1"""
        raw = text.strip()
        try:
            if "/" in raw:
                num_str, den_str = raw.split("/", 1)
                value = Fraction(int(num_str), int(den_str))
            else:
                value = Fraction(int(raw))
        except (ValueError, ZeroDivisionError):
            raise AngleError(f"Invalid angle: {text!r}. Expected 'p/q'")
        return cls.of(value)

    @cached_property
    def value(self) -> Fraction:
        return Fraction(self.num, self.den)

    def turns(self) -> float:
        """Floating value, for plotting and numerics only"""
        return self.num / self.den

    def __lt__(self, other: "Angle") -> bool:
        if not isinstance(other, Angle):
            return NotImplemented
        return self.num * other.den < other.num * self.den

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


ZERO = Angle(0, 1)


@dataclass(frozen=True)
class OrbitInfo:
    preperiod: int
    period: int

    @property
    def is_periodic(self) -> bool:
        return self.preperiod == 0


def _check_degree(d: int) -> None:
    if d < 2:
        raise AngleError(f"Angle map degree must be >= 2, got {d}")


def sigma(a: Angle, d: int) -> Angle:
    """The angle map t -> d*t mod 1"""
    _check_degree(d)
    return Angle((a.num * d) % a.den, a.den) if gcd(d, a.den) == 1 else Angle.of(a.value * d)


def sigma_n(a: Angle, d: int, n: int) -> Angle:
    """n-fold iterate of sigma"""
    _check_degree(d)
    return Angle.of(a.value * d**n)


def preimages(a: Angle, d: int) -> Tuple[Angle, ...]:
    """The d angles (a + j)/d, in increasing order"""
    _check_degree(d)
    return tuple(Angle.of((a.value + j) / d) for j in range(d))


@lru_cache(maxsize=65536)
def orbit_info(a: Angle, d: int) -> OrbitInfo:
    _check_degree(d)
    seen: dict[Angle, int] = {}
    current = a
    step = 0
    while current not in seen:
        seen[current] = step
        current = sigma(current, d)
        step += 1
    first = seen[current]
    return OrbitInfo(preperiod=first, period=step - first)


def digits(a: Angle, d: int, n: int, upper: bool = False) -> DigitWord:
    """
    First n base-d digits of a.

    The default is the terminating expansion (trailing zeros). With upper=True the
    expansion approaching a from below is used instead, so 0 reads as (d-1)(d-1)...
    and 1/2 in base 2 as 0111...; non-terminating angles are unaffected.
    """
    _check_degree(d)
    if n < 0:
        raise AngleError(f"Digit count must be non-negative, got {n}")
    x = a.value
    if upper and x == 0:
        x = Fraction(1)
    word = []
    for _ in range(n):
        x *= d
        if upper:
            digit = -((-x.numerator) // x.denominator) - 1
        else:
            digit = x.numerator // x.denominator
        word.append(digit)
        x -= digit
    return tuple(word)


def word_value(word: DigitWord, d: int) -> int:
    value = 0
    for digit in word:
        if not 0 <= digit < d:
            raise AngleError(f"Digit {digit} out of range for base {d}")
        value = value * d + digit
    return value


def from_periodic_digits(prefix: DigitWord, repeating: DigitWord, d: int) -> Angle:
    """Exact value of prefix followed by repeating forever"""
    _check_degree(d)
    if not repeating:
        raise AngleError("Repeating word must be non-empty")
    head = Fraction(word_value(prefix, d), d ** len(prefix))
    tail = Fraction(word_value(repeating, d), d ** len(repeating) - 1)
    return Angle.of(head + tail / d ** len(prefix))


@lru_cache(maxsize=65536)
def expansion(a: Angle, d: int) -> Tuple[DigitWord, DigitWord]:
    """Canonical eventually periodic expansion of a as (prefix, repeating)"""
    info = orbit_info(a, d)
    prefix = digits(a, d, info.preperiod)
    repeating = digits(sigma_n(a, d, info.preperiod), d, info.period)
    return prefix, repeating


def format_word(word: DigitWord) -> str:
    return "".join(str(digit) for digit in word)
