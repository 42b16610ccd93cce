"""
Tuning as digit substitution.

A characteristic pair (theta_minus, theta_plus) of exact period n under sigma_d
gives two words u, v of n base-d digits. The connecting function p replaces
each binary digit of an inner angle by u (for 0) or v (for 1); its partial
inverse nu reads base-d digits back in blocks of n.
"""

from dataclasses import dataclass, field
from math import lcm
from typing import Optional, Sequence

from src.circle import (
    Angle,
    DigitWord,
    digits,
    expansion,
    format_word,
    from_periodic_digits,
    orbit_info,
)
from src.errors import AngleError, TuningError


@dataclass(frozen=True)
class TuningData:
    theta_minus: Angle
    theta_plus: Angle
    n: int
    d: int = 2
    k: int = 2
    word_u: DigitWord = field(init=False, compare=False)
    word_v: DigitWord = field(init=False, compare=False)

    def __post_init__(self):
        if self.k != 2:
            raise TuningError(f"Only quadratic inner maps are supported, got k={self.k}")
        if self.d < 2:
            raise TuningError(f"Ambient degree must be >= 2, got d={self.d}")
        if self.n < 1:
            raise TuningError(f"Period must be >= 1, got n={self.n}")
        for name in ("theta_minus", "theta_plus"):
            theta = getattr(self, name)
            info = orbit_info(theta, self.d)
            if info.preperiod != 0 or info.period != self.n:
                raise TuningError(
                    f"{name}={theta} has preperiod {info.preperiod} and period "
                    f"{info.period} under sigma_{self.d}, expected a period-{self.n} angle"
                )
        u = digits(self.theta_minus, self.d, self.n)
        v = digits(self.theta_plus, self.d, self.n, upper=True)
        if u == v:
            raise TuningError(f"Tuning words coincide: {format_word(u)}")
        object.__setattr__(self, "word_u", u)
        object.__setattr__(self, "word_v", v)

    @classmethod
    def from_angles(
        cls, theta_minus: Angle | str, theta_plus: Angle | str, n: int, d: int = 2, k: int = 2
    ) -> "TuningData":
        try:
            minus = theta_minus if isinstance(theta_minus, Angle) else Angle.parse(theta_minus)
            plus = theta_plus if isinstance(theta_plus, Angle) else Angle.parse(theta_plus)
        except AngleError as e:
            raise TuningError(str(e))
        return cls(minus, plus, n, d, k)

    @classmethod
    def from_words(cls, u: str, v: str, d: int = 2) -> "TuningData":
        """Tuning from its words, e.g. ("01", "10") for the basilica pair 1/3, 2/3"""
        if len(u) != len(v) or not u:
            raise TuningError(f"Tuning words must have equal positive length: {u!r}, {v!r}")
        try:
            word_u = tuple(int(ch) for ch in u)
            word_v = tuple(int(ch) for ch in v)
            theta_minus = from_periodic_digits((), word_u, d)
            theta_plus = from_periodic_digits((), word_v, d)
        except (ValueError, AngleError) as e:
            raise TuningError(f"Invalid tuning words {u!r}, {v!r}: {e}")
        return cls(theta_minus, theta_plus, len(u), d)

    @classmethod
    def identity(cls, d: int = 2) -> "TuningData":
        return cls(Angle(0, 1), Angle(0, 1), 1, d)

    @property
    def words(self) -> tuple[DigitWord, DigitWord]:
        return self.word_u, self.word_v

    def to_dict(self) -> dict:
        return {
            "theta_minus": str(self.theta_minus),
            "theta_plus": str(self.theta_plus),
            "n": self.n,
            "d": self.d,
            "k": self.k,
        }

    def __str__(self) -> str:
        return f"({self.theta_minus}, {self.theta_plus}) u={format_word(self.word_u)} v={format_word(self.word_v)}"


def _substitute(t: TuningData, word: Sequence[int]) -> DigitWord:
    blocks = (t.word_u, t.word_v)
    return tuple(digit for bit in word for digit in blocks[bit])


def tuning_p(t: TuningData, a: Angle) -> Angle:
    """Connecting function: substitute u/v for the binary digits of a"""
    prefix, repeating = expansion(a, t.k)
    return from_periodic_digits(_substitute(t, prefix), _substitute(t, repeating), t.d)


def _decode(t: TuningData, word: DigitWord) -> Optional[DigitWord]:
    decoded = []
    for i in range(0, len(word), t.n):
        block = word[i : i + t.n]
        if block == t.word_u:
            decoded.append(0)
        elif block == t.word_v:
            decoded.append(1)
        else:
            return None
    return tuple(decoded)


def tuning_nu(t: TuningData, b: Angle) -> Optional[Angle]:
    """
    Decode b in blocks of n digits, None when some block is neither u nor v.

    The eventually periodic expansion is first realigned so the prefix has a
    multiple of n digits and the repeating part a multiple of n as well.
    """
    prefix, repeating = expansion(b, t.d)
    r = len(repeating)
    pad = (-len(prefix)) % t.n
    aligned_prefix = prefix + tuple(repeating[i % r] for i in range(pad))
    rotated = tuple(repeating[(pad + i) % r] for i in range(r))
    aligned_repeating = rotated * (lcm(r, t.n) // r)

    head = _decode(t, aligned_prefix)
    tail = _decode(t, aligned_repeating)
    if head is None or tail is None:
        return None
    return from_periodic_digits(head, tail, t.k)


def is_in_image(t: TuningData, b: Angle) -> bool:
    """b = p(a) for some a; nu(b) alone can decode the other expansion of an angle"""
    a = tuning_nu(t, b)
    return a is not None and tuning_p(t, a) == b
