"""Transverse profiles A_z(x, y) solving (∂x² + ∂y²)A_z = -κ²A_z."""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Any, ClassVar, TypeAlias

import numpy as np
import numpy.typing as npt
from scipy import special

from prahmlab.core.exceptions import KappaZero, ModeError
from prahmlab.waveguide.bessel import bessel_jn

Array: TypeAlias = npt.NDArray[Any]


class ProfileKind(str, Enum):
    """Built-in transverse profiles."""

    SEPARABLE_COSINE = "separable-cosine"
    BESSEL_CIRCULAR = "bessel-circular"


@dataclass(frozen=True)
class QuadratureCell:
    """Rectangle [x0, x0+lx) × [y0, y0+ly) over which cross-section averages are taken."""

    x0: float
    y0: float
    lx: float
    ly: float
    periodic: bool


class TransverseProfile(ABC):
    """Abstract base class for transverse mode profiles."""

    KIND: ClassVar[ProfileKind]

    @property
    @abstractmethod
    def kappa(self) -> float:
        """Transverse wavenumber κ."""
        ...

    @abstractmethod
    def value(self, x: npt.ArrayLike, y: npt.ArrayLike) -> Array:
        """A_z at (x, y)."""
        ...

    @abstractmethod
    def gradient(self, x: npt.ArrayLike, y: npt.ArrayLike) -> tuple[Array, Array]:
        """Analytic (∂x A_z, ∂y A_z)."""
        ...

    @abstractmethod
    def cell(self) -> QuadratureCell:
        """Cross-section cell on which profile derivatives are periodic or vanish."""
        ...

    @abstractmethod
    def reference_point(self) -> tuple[float, float]:
        """A point where both gradient components are nonzero."""
        ...


@dataclass(frozen=True)
class SeparableCosine(TransverseProfile):
    """A_z = cos(kx·x)·cos(ky·y) on a rectangular guide [0, a] × [0, b]."""

    KIND: ClassVar[ProfileKind] = ProfileKind.SEPARABLE_COSINE

    kx: float
    ky: float

    @classmethod
    def from_kappa(cls, kappa: float, aspect: float = 1.0) -> "SeparableCosine":
        """Split κ into kx = π/a, ky = π/b with b = aspect·a."""
        if aspect <= 0:
            raise ModeError(f"aspect must be positive, got {aspect}")
        kx = kappa / math.sqrt(1.0 + 1.0 / aspect**2)
        return cls(kx=kx, ky=kx / aspect)

    @property
    def kappa(self) -> float:
        return math.hypot(self.kx, self.ky)

    def value(self, x: npt.ArrayLike, y: npt.ArrayLike) -> Array:
        return np.cos(self.kx * np.asarray(x)) * np.cos(self.ky * np.asarray(y))

    def gradient(self, x: npt.ArrayLike, y: npt.ArrayLike) -> tuple[Array, Array]:
        cx, sx = np.cos(self.kx * np.asarray(x)), np.sin(self.kx * np.asarray(x))
        cy, sy = np.cos(self.ky * np.asarray(y)), np.sin(self.ky * np.asarray(y))
        return -self.kx * sx * cy, -self.ky * cx * sy

    def cell(self) -> QuadratureCell:
        return QuadratureCell(0.0, 0.0, 2 * math.pi / self.kx, 2 * math.pi / self.ky, True)

    def reference_point(self) -> tuple[float, float]:
        return math.pi / (4 * self.kx), math.pi / (3 * self.ky)


@dataclass(frozen=True)
class BesselCircular(TransverseProfile):
    """A_z = J_m(κr)·cos(mφ) in a circular guide."""

    KIND: ClassVar[ProfileKind] = ProfileKind.BESSEL_CIRCULAR

    kappa_value: float
    order: int = 1

    @property
    def kappa(self) -> float:
        return self.kappa_value

    def _polar(self, x: npt.ArrayLike, y: npt.ArrayLike) -> tuple[Array, Array]:
        xa, ya = np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64)
        return np.hypot(xa, ya), np.arctan2(ya, xa)

    def _orders(self, u: Array) -> tuple[Array, Array, Array]:
        """J_{m-1}, J_m, J_{m+1} at u, using J_{-1} = -J_1."""
        m = self.order
        table = bessel_jn(m + 1, u)
        below = -table[1] if m == 0 else table[m - 1]
        return below, table[m], table[m + 1]

    def value(self, x: npt.ArrayLike, y: npt.ArrayLike) -> Array:
        r, phi = self._polar(x, y)
        _, jm, _ = self._orders(self.kappa_value * r)
        return jm * np.cos(self.order * phi)

    def gradient(self, x: npt.ArrayLike, y: npt.ArrayLike) -> tuple[Array, Array]:
        r, phi = self._polar(x, y)
        below, _, above = self._orders(self.kappa_value * r)
        k, m = self.kappa_value, self.order
        d_r = k * 0.5 * (below - above) * np.cos(m * phi)
        # (1/r)∂φ A, with m·J_m(u)/u = (J_{m-1} + J_{m+1})/2 regular at r = 0
        d_phi = -k * 0.5 * (below + above) * np.sin(m * phi)
        c, s = np.cos(phi), np.sin(phi)
        return d_r * c - d_phi * s, d_r * s + d_phi * c

    def cell(self) -> QuadratureCell:
        radius = float(special.jn_zeros(self.order, 1)[0]) / self.kappa_value
        return QuadratureCell(-radius, -radius, 2 * radius, 2 * radius, False)

    def reference_point(self) -> tuple[float, float]:
        radius = float(special.jn_zeros(self.order, 1)[0]) / self.kappa_value
        return 0.35 * radius, 0.2 * radius


PROFILE_REGISTRY: dict[ProfileKind, type[TransverseProfile]] = {
    ProfileKind.SEPARABLE_COSINE: SeparableCosine,
    ProfileKind.BESSEL_CIRCULAR: BesselCircular,
}


def build_profile(
    kind: ProfileKind | str,
    kappa: float,
    aspect: float = 1.0,
    order: int = 1,
) -> TransverseProfile:
    """Construct a registered profile for transverse wavenumber κ.

    Args:
        kind: Profile kind or its string value.
        kappa: Transverse wavenumber, must be positive.
        aspect: b/a side ratio for the separable-cosine profile.
        order: Azimuthal order m for the Bessel profile.

    Returns:
        The profile instance.
    """
    kind = ProfileKind(kind)
    if kappa <= 0:
        raise KappaZero()
    if kind is ProfileKind.SEPARABLE_COSINE:
        return SeparableCosine.from_kappa(kappa, aspect)
    if order < 0:
        raise ModeError(f"azimuthal order must be >= 0, got {order}")
    return BesselCircular(kappa_value=kappa, order=order)


def profile_helmholtz_residual(profile: TransverseProfile, h: float, samples: int = 21) -> float:
    """Max |∇²A + κ²A| / (κ² max|A|) with a five-point Laplacian of spacing h.

    Args:
        profile: Profile to test.
        h: Finite-difference spacing.
        samples: Points per side of the interior sample lattice.

    Returns:
        Normalised residual; O(h²).
    """
    if h <= 0:
        raise ValueError(f"spacing must be positive, got {h}")
    cell = profile.cell()
    xs = cell.x0 + cell.lx * (np.arange(samples) + 0.5) / samples
    ys = cell.y0 + cell.ly * (np.arange(samples) + 0.5) / samples
    x, y = np.meshgrid(xs, ys, indexing="ij")

    a = profile.value(x, y)
    laplacian = (
        profile.value(x + h, y)
        + profile.value(x - h, y)
        + profile.value(x, y + h)
        + profile.value(x, y - h)
        - 4.0 * a
    ) / h**2
    kappa2 = profile.kappa**2
    return float(np.max(np.abs(laplacian + kappa2 * a)) / (kappa2 * np.max(np.abs(a))))
