"""
Root finding: Aberth simultaneous iteration for polynomial roots and a scalar
Newton solver used by the ray tracer and landing certification.
"""

from dataclasses import dataclass
from typing import Callable, Sequence, Tuple

import numpy as np

from src.errors import CriticalPointError

ABERTH_TOLERANCE = 1e-12
ABERTH_MAX_ITERATIONS = 200


def aberth_roots(
    coefficients: Sequence[complex],
    tolerance: float = ABERTH_TOLERANCE,
    max_iterations: int = ABERTH_MAX_ITERATIONS,
) -> np.ndarray:
    """
    All roots of the polynomial with the given coefficients (highest degree first).

    Raises CriticalPointError when the largest correction is still above
    tolerance after max_iterations sweeps.
    """
    coeffs = np.trim_zeros(np.asarray(coefficients, dtype=np.complex128), "f")
    n = len(coeffs) - 1
    if n < 1:
        return np.empty(0, dtype=np.complex128)
    coeffs = coeffs / coeffs[0]
    deriv = np.polyder(coeffs)

    # initial guesses on a circle around the root centroid, rotated off the axes
    center = -coeffs[1] / n
    radius = 1 + float(np.max(np.abs(coeffs[1:])))
    angles = 2 * np.pi * np.arange(n) / n + 0.4
    z = center + radius * np.exp(1j * angles)

    with np.errstate(divide="ignore", invalid="ignore"):
        for _ in range(max_iterations):
            ratio = np.polyval(coeffs, z) / np.polyval(deriv, z)
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            repulsion = np.sum(1 / diff, axis=1)
            correction = ratio / (1 - ratio * repulsion)
            correction[np.polyval(coeffs, z) == 0] = 0
            if not np.all(np.isfinite(correction)):
                raise CriticalPointError("Aberth iteration produced non-finite values")
            z = z - correction
            if float(np.max(np.abs(correction))) < tolerance:
                return z
    raise CriticalPointError(
        f"Aberth iteration did not converge in {max_iterations} sweeps"
    )


@dataclass(frozen=True)
class NewtonResult:
    root: complex
    converged: bool
    iterations: int


def newton(
    func: Callable[[complex], Tuple[complex, complex]],
    seed: complex,
    tolerance: float = 1e-12,
    max_iterations: int = 100,
    residual_scale: float = 1.0,
) -> NewtonResult:
    """
    Newton's method on a function returning (value, derivative).

    Converged when the step is below tolerance relative to max(1, |z|), or when
    the residual is at rounding level relative to residual_scale (needed at
    multiple roots, where steps stall around sqrt(eps)).
    """
    z = seed
    for iteration in range(1, max_iterations + 1):
        value, deriv = func(z)
        if abs(value) <= 1e-15 * max(1.0, residual_scale):
            return NewtonResult(z, True, iteration)
        if deriv == 0 or not np.isfinite(deriv):
            return NewtonResult(z, False, iteration)
        step = value / deriv
        z = z - step
        if not np.isfinite(z):
            return NewtonResult(seed, False, iteration)
        if abs(step) <= tolerance * max(1.0, abs(z)):
            return NewtonResult(z, True, iteration)
    return NewtonResult(z, False, max_iterations)


