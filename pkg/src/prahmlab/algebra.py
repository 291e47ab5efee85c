"""Real rotation algebra generated by σ, transverse 2-vectors and the phasor convention.

σ is the quarter-turn matrix [[0, -1], [1, 0]], so σ² = -1 and every rotation of the
cross-section is Θ(θ) = cos θ + σ sin θ. Rotations stay real; the imaginary unit only
appears in field phasors exp(i(ωt - kz + ξ)).

Every function accepts scalar components or numpy arrays of matching shape, so the
same code evaluates a single point or a whole sampled grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, TypeAlias

import numpy as np
import numpy.typing as npt

ComplexLike: TypeAlias = complex | npt.NDArray[Any]
RealLike: TypeAlias = float | npt.NDArray[Any]


@dataclass(frozen=True, slots=True)
class TransverseVec:
    """Complex 2-vector in the guide cross-section, ordered as a column (x, y)."""

    x: ComplexLike
    y: ComplexLike

    def __add__(self, other: TransverseVec) -> TransverseVec:
        return TransverseVec(self.x + other.x, self.y + other.y)

    def __sub__(self, other: TransverseVec) -> TransverseVec:
        return TransverseVec(self.x - other.x, self.y - other.y)

    def __neg__(self) -> TransverseVec:
        return TransverseVec(-self.x, -self.y)

    def __mul__(self, factor: ComplexLike) -> TransverseVec:
        return TransverseVec(self.x * factor, self.y * factor)

    __rmul__ = __mul__

    def conj(self) -> TransverseVec:
        return TransverseVec(np.conj(self.x), np.conj(self.y))

    def norm(self) -> RealLike:
        """Euclidean length sqrt(|x|² + |y|²), pointwise for array components."""
        return np.sqrt(np.abs(self.x) ** 2 + np.abs(self.y) ** 2)

    def is_finite(self) -> bool:
        return bool(np.all(np.isfinite(self.x)) and np.all(np.isfinite(self.y)))


@dataclass(frozen=True, slots=True)
class SigmaRotation:
    """Θ = exp(σ·angle), stored by its angle so that composition stays exact."""

    angle: RealLike

    def matrix(self) -> npt.NDArray[np.float64]:
        """Materialize the 2×2 matrix (trailing axes for array angles)."""
        c = np.cos(self.angle)
        s = np.sin(self.angle)
        return np.stack([np.stack([c, -s], axis=-1), np.stack([s, c], axis=-1)], axis=-2)

    def determinant(self) -> RealLike:
        m = self.matrix()
        return m[..., 0, 0] * m[..., 1, 1] - m[..., 0, 1] * m[..., 1, 0]

    def compose(self, other: SigmaRotation) -> SigmaRotation:
        return SigmaRotation(self.angle + other.angle)

    def inverse(self) -> SigmaRotation:
        """Φ = Θ⁻¹ = Θᵀ."""
        return SigmaRotation(-self.angle)

    def apply(self, F: TransverseVec) -> TransverseVec:
        return rotate(self, F)


@dataclass(frozen=True, slots=True)
class PhasorConvention:
    """ζ = ωt - kz + phase0."""

    omega: float
    k: float
    phase0: float = 0.0

    def phase(self, t: RealLike, z: RealLike) -> RealLike:
        return self.omega * t - self.k * z + self.phase0

    def phasor(self, t: RealLike, z: RealLike) -> ComplexLike:
        return np.exp(1j * self.phase(t, z))


def sigma_apply(F: TransverseVec) -> TransverseVec:
    """Quarter turn: σ(x, y) = (-y, x)."""
    return TransverseVec(-F.y, F.x)


def rotate(R: SigmaRotation, F: TransverseVec) -> TransverseVec:
    c = np.cos(R.angle)
    s = np.sin(R.angle)
    return TransverseVec(c * F.x - s * F.y, s * F.x + c * F.y)


def inner(F: TransverseVec, G: TransverseVec) -> ComplexLike:
    """Transpose product FᵀG; no conjugation."""
    return F.x * G.x + F.y * G.y


def rotation_identity_check(theta: float, F: TransverseVec, G: TransverseVec) -> float:
    """Deviation of (ΘσF)ᵀ(ΘσG) from FᵀG."""
    R = SigmaRotation(theta)
    lhs = inner(rotate(R, sigma_apply(F)), rotate(R, sigma_apply(G)))
    return float(np.max(np.abs(lhs - inner(F, G))))


_SQRT_HALF = 1.0 / math.sqrt(2.0)


def circular_components(F: TransverseVec) -> tuple[ComplexLike, ComplexLike]:
    """Components (a+, a-) of F in the basis u± = (1, ∓i)/√2.

    Θ(θ)u± = exp(±iθ)u±, so a rotation becomes a pair of scalar phases.
    """
    a_plus = (F.x + 1j * F.y) * _SQRT_HALF
    a_minus = (F.x - 1j * F.y) * _SQRT_HALF
    return a_plus, a_minus


def from_circular(a_plus: ComplexLike, a_minus: ComplexLike) -> TransverseVec:
    """Inverse of `circular_components`."""
    return TransverseVec(
        (a_plus + a_minus) * _SQRT_HALF,
        -1j * (a_plus - a_minus) * _SQRT_HALF,
    )


def polarization_ellipse(F: TransverseVec) -> tuple[RealLike, RealLike]:
    """Orientation ψ ∈ (-π/2, π/2] and ellipticity angle χ ∈ [-π/4, π/4] of a Jones vector.

    Computed from the Stokes parameters. A real rotation by α shifts ψ by α (mod π) and
    leaves χ unchanged; a real rescaling changes neither.
    """
    s0 = np.abs(F.x) ** 2 + np.abs(F.y) ** 2
    s1 = np.abs(F.x) ** 2 - np.abs(F.y) ** 2
    s2 = 2.0 * np.real(F.x * np.conj(F.y))
    s3 = -2.0 * np.imag(F.x * np.conj(F.y))
    orientation = 0.5 * np.arctan2(s2, s1)
    ellipticity = 0.5 * np.arcsin(np.clip(s3 / s0, -1.0, 1.0))
    return orientation, ellipticity
