"""Sampled field configurations on a (z, t, x, y) lattice."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from typing import TYPE_CHECKING, Any, Protocol, TypeAlias

import numpy as np
import numpy.typing as npt

from prahmlab.algebra import TransverseVec
from prahmlab.core.exceptions import GridError, GridMismatch
from prahmlab.waveguide.modes import FieldSample, ModeSpec
from prahmlab.waveguide.profiles import TransverseProfile

if TYPE_CHECKING:
    from prahmlab.helical import HelicalModulation

logger = logging.getLogger(__name__)

Array: TypeAlias = npt.NDArray[Any]


class FieldMapping(Protocol):
    """Anything that evaluates fields at broadcastable (x, y, z, t)."""

    mode: ModeSpec

    def __call__(
        self, x: npt.ArrayLike, y: npt.ArrayLike, z: npt.ArrayLike, t: npt.ArrayLike
    ) -> FieldSample: ...


@dataclass(frozen=True)
class GridSpec:
    """Uniform lattice. Arrays are indexed [z, t, x, y].

    The z axis is centred on `z0`. The t axis is centred on 0 when `t0` is None,
    otherwise it starts at `t0`. With `ghost_t` the first and last time samples only
    feed central differences and are excluded from period averages. With
    `periodic_xy` the cross-section is one full period of the profile and transverse
    derivatives are spectral.
    """

    nx: int
    ny: int
    nt: int
    hx: float
    hy: float
    ht: float
    hz: float
    nz: int = 3
    x0: float = 0.0
    y0: float = 0.0
    z0: float = 0.0
    t0: float | None = None
    periodic_xy: bool = False
    ghost_t: bool = False

    def __post_init__(self) -> None:
        if min(self.nx, self.ny, self.nt, self.nz) < 1:
            raise GridError("all sample counts must be positive")
        if min(self.hx, self.hy, self.ht, self.hz) <= 0:
            raise GridError("all spacings must be positive")

    @classmethod
    def canonical(cls) -> GridSpec:
        """32×32×64 residual grid with three z planes."""
        return cls(nx=32, ny=32, nt=64, hx=0.015, hy=0.015, ht=0.0025, hz=0.0025)

    @classmethod
    def sweep(cls) -> GridSpec:
        """Fine-in-(z, t) grid used by helical-velocity sweeps."""
        return cls(nx=24, ny=24, nt=3, hx=0.005, hy=0.005, ht=1e-4, hz=1e-4)

    @classmethod
    def full_cell(
        cls,
        profile: TransverseProfile,
        omega: float,
        nx: int = 32,
        ny: int = 32,
        nt: int = 64,
        periods: int = 1,
        nz: int = 3,
        hz: float = 1e-3,
        ghost_t: bool = False,
        t_start: float = 0.0,
    ) -> GridSpec:
        """One full periodic cross-section cell and `periods` temporal periods.

        Samples exclude the far endpoints so that uniform averages are exact for
        trigonometric integrands.
        """
        cell = profile.cell()
        if not cell.periodic:
            raise GridError(f"profile {profile.KIND.value} has no periodic quadrature cell")
        ht = periods * 2.0 * math.pi / omega / nt
        total = nt + 2 if ghost_t else nt
        return cls(
            nx=nx,
            ny=ny,
            nt=total,
            hx=cell.lx / nx,
            hy=cell.ly / ny,
            ht=ht,
            hz=hz,
            nz=nz,
            x0=cell.x0,
            y0=cell.y0,
            t0=t_start - ht if ghost_t else t_start,
            periodic_xy=True,
            ghost_t=ghost_t,
        )

    def refined(self) -> GridSpec:
        """Halve every spacing while keeping the sampled window."""
        if self.periodic_xy:
            nx, ny = 2 * self.nx, 2 * self.ny
        else:
            nx, ny = 2 * (self.nx - 1) + 1, 2 * (self.ny - 1) + 1
        return replace(
            self,
            nx=nx,
            ny=ny,
            nt=2 * (self.nt - 1) + 1,
            hx=self.hx / 2,
            hy=self.hy / 2,
            ht=self.ht / 2,
            hz=self.hz / 2,
        )

    @property
    def shape(self) -> tuple[int, int, int, int]:
        return (self.nz, self.nt, self.nx, self.ny)

    @property
    def spacing(self) -> float:
        return self.hx

    @property
    def window(self) -> slice:
        """Time samples that belong to the averaging window."""
        return slice(1, -1) if self.ghost_t else slice(None)

    @property
    def center(self) -> int:
        return self.nz // 2

    def x(self) -> Array:
        return self.x0 + self.hx * np.arange(self.nx)

    def y(self) -> Array:
        return self.y0 + self.hy * np.arange(self.ny)

    def z(self) -> Array:
        return self.z0 + self.hz * (np.arange(self.nz) - (self.nz - 1) / 2)

    def t(self) -> Array:
        if self.t0 is None:
            return self.ht * (np.arange(self.nt) - (self.nt - 1) / 2)
        return self.t0 + self.ht * np.arange(self.nt)

    def mesh(self) -> tuple[Array, Array, Array, Array]:
        """Broadcastable coordinate arrays (x, y, z, t) for shape [z, t, x, y]."""
        return (
            self.x()[None, None, :, None],
            self.y()[None, None, None, :],
            self.z()[:, None, None, None],
            self.t()[None, :, None, None],
        )


@dataclass(frozen=True)
class FieldGrid:
    """Dense samples of E_T, cB_T, E_z, cB_z over a GridSpec.

    `theta[z, t]` is the helical rotation angle of the transverse fields (None when
    unmodulated); residual operators evaluate transverse derivatives in the frame
    rotated by it. `Dt`/`Dz` are present only for dispersive modulated fields.
    """

    spec: GridSpec
    Et: TransverseVec
    cBt: TransverseVec
    Ez: Array
    cBz: Array
    n: float
    omega: float
    theta: Array | None = None
    Dt: TransverseVec | None = None
    Dz: Array | None = None
    mode: ModeSpec | None = None
    modulation: HelicalModulation | None = None

    def max_field(self) -> float:
        """max(max|E|, max|cB|) over all samples."""
        e = np.sqrt(np.abs(self.Et.x) ** 2 + np.abs(self.Et.y) ** 2 + np.abs(self.Ez) ** 2)
        b = np.sqrt(np.abs(self.cBt.x) ** 2 + np.abs(self.cBt.y) ** 2 + np.abs(self.cBz) ** 2)
        return float(max(e.max(), b.max()))

    def displacement(self) -> tuple[TransverseVec, Array]:
        """(D_T, D_z), n²E unless stored explicitly."""
        n2 = self.n**2
        dt = self.Dt if self.Dt is not None else self.Et * n2
        dz = self.Dz if self.Dz is not None else self.Ez * n2
        return dt, dz

    def with_fields(self, **changes: Any) -> FieldGrid:
        return replace(self, **changes)

    def scaled(self, factor: complex) -> FieldGrid:
        return replace(
            self,
            Et=self.Et * factor,
            cBt=self.cBt * factor,
            Ez=self.Ez * factor,
            cBz=self.cBz * factor,
            Dt=None if self.Dt is None else self.Dt * factor,
            Dz=None if self.Dz is None else self.Dz * factor,
        )

    def __add__(self, other: FieldGrid) -> FieldGrid:
        if other.spec != self.spec:
            raise GridMismatch("cannot add grids with different sampling")
        if (self.theta is None) != (other.theta is None) or (
            self.theta is not None and not np.array_equal(self.theta, other.theta)
        ):
            raise GridMismatch("cannot add grids with different helical frames")
        dt_self, dz_self = self.displacement()
        dt_other, dz_other = other.displacement()
        explicit = self.Dt is not None or other.Dt is not None
        return replace(
            self,
            Et=self.Et + other.Et,
            cBt=self.cBt + other.cBt,
            Ez=self.Ez + other.Ez,
            cBz=self.cBz + other.cBz,
            Dt=dt_self + dt_other if explicit else None,
            Dz=dz_self + dz_other if explicit else None,
            mode=None,
            modulation=None,
        )


def _full(value: Any, shape: tuple[int, ...]) -> Array:
    return np.array(np.broadcast_to(value, shape), dtype=np.complex128)


def _full_vec(vec: TransverseVec, shape: tuple[int, ...]) -> TransverseVec:
    return TransverseVec(_full(vec.x, shape), _full(vec.y, shape))


def materialize(sampler: FieldMapping, spec: GridSpec) -> FieldGrid:
    """Evaluate a field mapping on every lattice point.

    Args:
        sampler: Mode or modulated-mode mapping; its `mode` supplies n and ω, and an
            optional `modulation` attribute supplies the rotation angle.
        spec: Lattice to sample.

    Returns:
        The materialised FieldGrid.
    """
    x, y, z, t = spec.mesh()
    sample = sampler(x, y, z, t)
    shape = spec.shape
    modulation = getattr(sampler, "modulation", None)
    theta = None
    if modulation is not None:
        theta = np.asarray(modulation.angle(spec.t()[None, :], spec.z()[:, None]), dtype=np.float64)
    logger.debug("materialized grid %s (modulated=%s)", shape, modulation is not None)
    return FieldGrid(
        spec=spec,
        Et=_full_vec(sample.Et, shape),
        cBt=_full_vec(sample.cBt, shape),
        Ez=_full(sample.Ez, shape),
        cBz=_full(sample.cBz, shape),
        n=sampler.mode.index,
        omega=sampler.mode.omega,
        theta=theta,
        Dt=None if sample.Dt is None else _full_vec(sample.Dt, shape),
        Dz=None if sample.Dz is None else _full(sample.Dz, shape),
        mode=sampler.mode,
        modulation=modulation,
    )


def zero_grid(spec: GridSpec, n: float = 1.5, omega: float = 2.0 * math.pi) -> FieldGrid:
    """All-zero configuration."""
    shape = spec.shape
    zeros = np.zeros(shape, dtype=np.complex128)
    return FieldGrid(
        spec=spec,
        Et=TransverseVec(zeros.copy(), zeros.copy()),
        cBt=TransverseVec(zeros.copy(), zeros.copy()),
        Ez=zeros.copy(),
        cBz=zeros.copy(),
        n=n,
        omega=omega,
    )
