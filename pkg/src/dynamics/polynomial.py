"""
Monic complex polynomials: parsing, Horner evaluation, iterates and escape tests.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np

from src.errors import PolynomialParseError


@dataclass(frozen=True)
class PolynomialSpec:
    """Monic polynomial, coefficients highest degree first"""

    coefficients: Tuple[complex, ...]

    def __post_init__(self):
        coeffs = tuple(complex(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) < 3:
            raise PolynomialParseError(
                f"Polynomial degree must be >= 2, got {len(coeffs) - 1}"
            )
        if coeffs[0] != 1:
            raise PolynomialParseError(
                f"Polynomial must be monic, leading coefficient is {coeffs[0]}"
            )

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def quadratic(cls, c: complex) -> "PolynomialSpec":
        return cls((1, 0, c))

    @classmethod
    def parse(cls, text: str) -> "PolynomialSpec":
        """
        Parse either "c=<complex>" (the family z^2 + c) or a comma separated
        coefficient list, highest degree first ("1,0,-1" is z^2 - 1).
        Complex numbers may use i or j for the imaginary unit.
        """
        raw = text.strip()
        if raw.lower().startswith("c="):
            return cls.quadratic(_parse_complex(raw[2:]))
        parts = [p for p in raw.split(",")]
        if len(parts) < 3:
            raise PolynomialParseError(
                f"Invalid polynomial {text!r}: need 'c=<value>' or at least 3 coefficients"
            )
        return cls(tuple(_parse_complex(p) for p in parts))

    @property
    def label(self) -> str:
        return ",".join(_format_complex(c) for c in self.coefficients)


def _parse_complex(text: str) -> complex:
    cleaned = text.strip().replace(" ", "").replace("i", "j")
    if not cleaned:
        raise PolynomialParseError("Empty coefficient")
    try:
        return complex(cleaned)
    except ValueError:
        raise PolynomialParseError(f"Invalid complex number: {text!r}")


def _format_complex(c: complex) -> str:
    if c.imag == 0:
        return repr(c.real)
    return repr(c).strip("()")


def evaluate(spec: PolynomialSpec, z: complex) -> complex:
    """P(z) by Horner's rule"""
    result = 0j
    for coeff in spec.coefficients:
        result = result * z + coeff
    return result


def evaluate_with_derivative(spec: PolynomialSpec, z: complex) -> Tuple[complex, complex]:
    value = 0j
    deriv = 0j
    for coeff in spec.coefficients:
        deriv = deriv * z + value
        value = value * z + coeff
    return value, deriv


def derivative(spec: PolynomialSpec, z: complex) -> complex:
    return evaluate_with_derivative(spec, z)[1]


def derivative_coefficients(spec: PolynomialSpec) -> Tuple[complex, ...]:
    d = spec.degree
    return tuple(c * (d - i) for i, c in enumerate(spec.coefficients[:-1]))


def iterate(spec: PolynomialSpec, z: complex, n: int) -> complex:
    for _ in range(n):
        z = evaluate(spec, z)
    return z


def iterate_with_derivative(
    spec: PolynomialSpec, z: complex, n: int
) -> Tuple[complex, complex]:
    """P^n(z) and (P^n)'(z) by the chain rule"""
    deriv = 1 + 0j
    for _ in range(n):
        value, step = evaluate_with_derivative(spec, z)
        deriv *= step
        z = value
    return z, deriv


def escape_radius(spec: PolynomialSpec) -> float:
    """R with |z| > R forcing |P(z)| > |z| and escape: max(2, sum of |coefficients|)"""
    return max(2.0, float(sum(abs(c) for c in spec.coefficients)))


class MultiplierKind(Enum):
    REPELLING = "repelling"
    ATTRACTING = "attracting"
    PARABOLIC = "parabolic"
    INDIFFERENT = "indifferent"


def multiplier(spec: PolynomialSpec, z: complex, period: int) -> complex:
    return iterate_with_derivative(spec, z, period)[1]


def classify_multiplier(
    value: complex, tolerance: float = 1e-6, max_denominator: int = 64
) -> MultiplierKind:
    """Repelling, attracting, parabolic (root of unity) or irrationally indifferent"""
    modulus = abs(value)
    if modulus > 1 + tolerance:
        return MultiplierKind.REPELLING
    if modulus < 1 - tolerance:
        return MultiplierKind.ATTRACTING
    turns = float(np.angle(value)) / (2 * np.pi)
    for q in range(1, max_denominator + 1):
        if abs(turns * q - round(turns * q)) < tolerance * q:
            return MultiplierKind.PARABOLIC
    return MultiplierKind.INDIFFERENT


def escape_counts(
    spec: PolynomialSpec,
    extent: float,
    size: int,
    budget: int = 64,
) -> np.ndarray:
    """
    Escape-time counts on a size x size grid covering [-extent, extent]^2.
    Row 0 is the top edge (largest imaginary part). Points that never escape get budget.
    """
    axis = np.linspace(-extent, extent, size)
    grid_x, grid_y = np.meshgrid(axis, axis[::-1])
    z = grid_x + 1j * grid_y
    counts = np.full(z.shape, budget, dtype=np.int32)
    active = np.ones(z.shape, dtype=bool)
    radius = escape_radius(spec)
    coeffs = np.array(spec.coefficients, dtype=np.complex128)
    for k in range(budget):
        z[active] = np.polyval(coeffs, z[active])
        escaped = active & (np.abs(z) > radius)
        counts[escaped] = k
        active &= ~escaped
        if not active.any():
            break
    return counts
