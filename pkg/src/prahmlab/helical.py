"""Helical modulation Θ = exp(σ·h·Ω·(t - z/v_h)) of modal transverse fields."""

import logging
import math
from collections.abc import Iterable
from dataclasses import dataclass
from typing import Any, TypeAlias

import numpy as np
import numpy.typing as npt

from prahmlab.algebra import SigmaRotation, TransverseVec, circular_components, from_circular, rotate
from prahmlab.core.exceptions import IncompletePeriod, ModeError
from prahmlab.core.models import SweepPoint
from prahmlab.maxwell.grid import FieldGrid, FieldMapping, GridSpec, materialize
from prahmlab.maxwell.residual import residual_te, residual_tm
from prahmlab.waveguide.modes import FieldSample, ModeKind, ModeSpec, mode_sampler

logger = logging.getLogger(__name__)

Array: TypeAlias = npt.NDArray[Any]

#: Residual entry that carries the uncancelled rotation term, per mode family.
CURL_EQUATION = {ModeKind.TE: "ampere_t", ModeKind.TM: "faraday_t"}


@dataclass(frozen=True)
class HelicalModulation:
    """Rotation by angle helicity·Ω·(t - z/v_h)."""

    Omega: float
    v_h: float
    helicity: int = 1

    def __post_init__(self) -> None:
        if self.Omega < 0:
            raise ModeError(f"helical frequency must be >= 0, got {self.Omega}")
        if self.v_h <= 0:
            raise ModeError(f"helical velocity must be positive, got {self.v_h}")
        if self.helicity not in (1, -1):
            raise ModeError(f"helicity must be +1 or -1, got {self.helicity}")

    @classmethod
    def matched(cls, mode: ModeSpec, Omega: float, helicity: int = 1) -> "HelicalModulation":
        """Modulation travelling at the mode's group velocity."""
        return cls(Omega=Omega, v_h=mode.group_velocity, helicity=helicity)

    def angle(self, t: npt.ArrayLike, z: npt.ArrayLike) -> Array:
        return self.helicity * self.Omega * (np.asarray(t) - np.asarray(z) / self.v_h)

    def rotation(self, t: npt.ArrayLike, z: npt.ArrayLike) -> SigmaRotation:
        return SigmaRotation(self.angle(t, z))


@dataclass
class HelicalSampler:
    """A mode mapping whose transverse fields are rotated pointwise.

    For a dispersive medium the circular components of the rotated field oscillate
    at ω ± hΩ, and the displacement uses n(ω ± hΩ)² for each of them.
    """

    base: FieldMapping
    modulation: HelicalModulation

    @property
    def mode(self) -> ModeSpec:
        return self.base.mode

    def __call__(
        self,
        x: npt.ArrayLike,
        y: npt.ArrayLike,
        z: npt.ArrayLike,
        t: npt.ArrayLike,
    ) -> FieldSample:
        sample = self.base(x, y, z, t)
        R = self.modulation.rotation(np.asarray(t), np.asarray(z))
        et = rotate(R, sample.Et)
        cbt = rotate(R, sample.cBt)

        mode = self.mode
        if not mode.refr.dispersive:
            return FieldSample(Et=et, cBt=cbt, Ez=sample.Ez, cBz=sample.cBz)

        shift = self.modulation.helicity * self.modulation.Omega
        a_plus, a_minus = circular_components(et)
        n_plus = mode.refr.index(mode.omega + shift)
        n_minus = mode.refr.index(mode.omega - shift)
        dt = from_circular(n_plus**2 * a_plus, n_minus**2 * a_minus)
        return FieldSample(
            Et=et, cBt=cbt, Ez=sample.Ez, cBz=sample.cBz, Dt=dt, Dz=mode.index**2 * sample.Ez
        )


def apply_helical(sampler: FieldMapping, mod: HelicalModulation) -> HelicalSampler:
    """Rotate Et and cBt by the modulation angle; Ez and cBz are unchanged."""
    return HelicalSampler(sampler, mod)


def leftover_term(mode: ModeSpec, mod: HelicalModulation) -> float:
    """Ω·|1/v_h - 1/v_g|, the rate left uncancelled when v_h ≠ v_g."""
    return mod.Omega * abs(1.0 / mod.v_h - 1.0 / mode.group_velocity)


def vh_sweep(
    spec: ModeSpec,
    Omega: float,
    ratios: Iterable[float],
    grid: GridSpec | None = None,
    helicity: int = 1,
) -> list[SweepPoint]:
    """Curl-equation residual of the modulated mode for v_h = ratio·v_g.

    Args:
        spec: Mode to modulate.
        Omega: Helical frequency, must be positive.
        ratios: Helical-to-group velocity ratios, all positive.
        grid: Sampling lattice; defaults to `GridSpec.sweep()`.
        helicity: Rotation sense.

    Returns:
        One SweepPoint per ratio, in input order.
    """
    if Omega <= 0:
        raise ModeError(f"sweep needs Omega > 0, got {Omega}")
    ratios = list(ratios)
    if any(r <= 0 for r in ratios):
        raise ModeError("velocity ratios must be positive")

    lattice = grid or GridSpec.sweep()
    sampler = mode_sampler(spec)
    v_g = spec.group_velocity
    equation = CURL_EQUATION[spec.kind]
    residual = residual_te if spec.kind is ModeKind.TE else residual_tm

    points = []
    for ratio in ratios:
        mod = HelicalModulation(Omega=Omega, v_h=ratio * v_g, helicity=helicity)
        report = residual(materialize(apply_helical(sampler, mod), lattice))
        point = SweepPoint(ratio=ratio, residual=report.l2[equation], leftover=leftover_term(spec, mod))
        logger.debug("v_h sweep ratio=%.4f residual=%.3e", ratio, point.residual)
        points.append(point)
    return points


def classical_energy_density(grid: FieldGrid) -> float:
    """½⟨Re E·Re D + |Re cB|²⟩ over all samples of a whole-period window.

    Units have ε₀ = μ₀ = 1, so D = n²E unless the grid stores D and H = cB. The
    average is exact on a full-cell grid whose window spans whole periods.
    """
    spec = grid.spec
    count = spec.nt - 2 if spec.ghost_t else spec.nt
    covered = count * spec.ht
    period = 2.0 * math.pi / abs(grid.omega)
    periods = covered / period
    if round(periods) < 1 or not math.isclose(periods, round(periods), rel_tol=1e-9):
        raise IncompletePeriod(covered, period)

    window = (slice(None), spec.window)
    dt, dz = grid.displacement()

    def re(values: Array) -> Array:
        return np.real(values[window])

    electric = (
        re(grid.Et.x) * re(dt.x) + re(grid.Et.y) * re(dt.y) + re(grid.Ez) * re(dz)
    )
    magnetic = re(grid.cBt.x) ** 2 + re(grid.cBt.y) ** 2 + re(grid.cBz) ** 2
    return float(0.5 * np.mean(electric + magnetic))


def rotated_magnitudes_match(sampler: FieldMapping, mod: HelicalModulation, spec: GridSpec) -> float:
    """Max pointwise change of |Et| and |cBt| caused by the modulation."""
    x, y, z, t = spec.mesh()
    bare = sampler(x, y, z, t)
    turned = apply_helical(sampler, mod)(x, y, z, t)

    def gap(a: TransverseVec, b: TransverseVec) -> float:
        return float(np.max(np.abs(np.asarray(a.norm()) - np.asarray(b.norm()))))

    return max(gap(bare.Et, turned.Et), gap(bare.cBt, turned.cBt))
