"""Effective advanced current, helical power-flow balance and interaction energy.

The advanced wave enters every balance through its starred form: complex
conjugation with the helicity reversed, so that its rotation matches the retarded
wave's and the transverse frame operators of both grids coincide.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, TypeAlias

import numpy as np
import numpy.typing as npt

from prahmlab.algebra import SigmaRotation, TransverseVec, inner, rotate, sigma_apply
from prahmlab.core.exceptions import GridMismatch
from prahmlab.core.models import InteractionEnergy, InteractionReport, PoyntingBalance
from prahmlab.helical import HelicalModulation
from prahmlab.maxwell.grid import FieldGrid, GridSpec, materialize
from prahmlab.maxwell.residual import residual_scale
from prahmlab.maxwell.stencil import Stencil
from prahmlab.packet.params import AdvancedMap, PacketSpec
from prahmlab.packet.synth import PacketSampler, apply_map, conj_sample
from prahmlab.waveguide.modes import FieldSample

logger = logging.getLogger(__name__)

Array: TypeAlias = npt.NDArray[Any]


@dataclass(frozen=True)
class EffectiveCurrent:
    """J_T = ∂tD_T - ∇̃×H|_T and J_z = ∂tD_z - (σ∇̃)ᵀH_T on the stencil's evaluation set."""

    Jt: TransverseVec
    Jz: Array
    scale: float

    def max_normalized(self) -> float:
        peak = max(float(np.max(np.asarray(self.Jt.norm()))), float(np.max(np.abs(self.Jz))))
        return peak / self.scale

    def rms_normalized(self) -> float:
        squared = np.abs(self.Jt.x) ** 2 + np.abs(self.Jt.y) ** 2 + np.abs(self.Jz) ** 2
        return float(np.sqrt(np.mean(squared))) / self.scale


def _transverse_curl(s: Stencil, vt: TransverseVec, vz: Array) -> TransverseVec:
    """Transverse part of the curl: ∂z(σV_T) - σ∇̃V_z."""
    return s.dz_vec(sigma_apply(vt)) - sigma_apply(s.grad(vz))


def effective_advanced_current(grid: FieldGrid) -> EffectiveCurrent:
    """Current needed to make the advanced fields satisfy Ampère's law.

    Raises:
        GridTooSmall: If any axis cannot support central differences.
    """
    s = Stencil(grid)
    dt_field, dz_field = grid.displacement()
    jt = s.dt_vec(dt_field) - _transverse_curl(s, grid.cBt, grid.cBz)
    jz = s.dt(dz_field) - s.curl(grid.cBt)
    return EffectiveCurrent(Jt=jt, Jz=jz, scale=residual_scale(grid))


def star_reverse(mod: HelicalModulation) -> HelicalModulation:
    """Helicity-reversed modulation; Θ(Δτ) of `mod` times its starred rotation is the identity."""
    return HelicalModulation(Omega=mod.Omega, v_h=mod.v_h, helicity=-mod.helicity)


def pairing_deviation(mod: HelicalModulation, dtau: npt.ArrayLike, F: TransverseVec) -> float:
    """Max |Θ(Δτ)·Θ*(Δτ)·F - F| over the given increments."""
    dt = np.asarray(dtau, dtype=np.float64)
    paired = rotate(mod.rotation(dt, 0.0), rotate(star_reverse(mod).rotation(dt, 0.0), F))
    return float(np.max(np.asarray((paired - F).norm())))


def _rotate_grid_vec(theta: Array, v: TransverseVec) -> TransverseVec:
    return rotate(SigmaRotation(theta[:, :, None, None]), v)


def star_grid(grid: FieldGrid) -> FieldGrid:
    """Θ(-2θ)·conj on transverse fields, conj on axial ones; θ → -θ.

    For A = Θ(θ)a this gives Θ(-θ)conj(a), the conjugate wave with reversed
    helicity. Applying it twice restores the grid.
    """
    theta = np.zeros(grid.spec.shape[:2]) if grid.theta is None else grid.theta

    def turn(v: TransverseVec | None) -> TransverseVec | None:
        return None if v is None else _rotate_grid_vec(-2.0 * theta, v.conj())

    return grid.with_fields(
        Et=turn(grid.Et),
        cBt=turn(grid.cBt),
        Ez=np.conj(grid.Ez),
        cBz=np.conj(grid.cBz),
        Dt=turn(grid.Dt),
        Dz=None if grid.Dz is None else np.conj(grid.Dz),
        theta=None if grid.theta is None else -grid.theta,
        modulation=None if grid.modulation is None else star_reverse(grid.modulation),
        mode=None,
    )


def _sample_of(grid: FieldGrid) -> FieldSample:
    return FieldSample(Et=grid.Et, cBt=grid.cBt, Ez=grid.Ez, cBz=grid.cBz, Dt=grid.Dt, Dz=grid.Dz)


def mapped_advanced_grid(gridR: FieldGrid, advanced_map: AdvancedMap | str) -> FieldGrid:
    """Advanced grid whose starred form is map(conj R)."""
    starred = apply_map(advanced_map, conj_sample(_sample_of(gridR)))
    return star_grid(
        gridR.with_fields(
            Et=starred.Et,
            cBt=starred.cBt,
            Ez=starred.Ez,
            cBz=starred.cBz,
            Dt=starred.Dt,
            Dz=starred.Dz,
            mode=None,
        )
    )


def _check_pair(gridR: FieldGrid, gridS: FieldGrid) -> None:
    if gridR.spec != gridS.spec:
        raise GridMismatch("retarded and advanced grids must share sampling")
    if (gridR.theta is None) != (gridS.theta is None) or (
        gridR.theta is not None
        and not np.allclose(gridR.theta, gridS.theta, rtol=0.0, atol=1e-12)
    ):
        raise GridMismatch("starred advanced rotation does not match the retarded rotation")


def _dot(s: Stencil, a: TransverseVec, az: Array, b: TransverseVec, bz: Array) -> Array:
    """Unconjugated 3-component product of stencil-centred a with already-centred b."""
    return inner(s.center_vec(a), b) + s.center(az) * bz


def _mean(values: Array) -> complex:
    return complex(np.mean(values))


def _energy_norm(grid: FieldGrid, s: Stencil) -> float:
    e = s.center_vec(grid.Et)
    b = s.center_vec(grid.cBt)
    electric = np.abs(e.x) ** 2 + np.abs(e.y) ** 2 + np.abs(s.center(grid.Ez)) ** 2
    magnetic = np.abs(b.x) ** 2 + np.abs(b.y) ** 2 + np.abs(s.center(grid.cBz)) ** 2
    return float(np.mean(grid.n**2 * electric + magnetic))


def helical_power_balance(gridR: FieldGrid, gridA: FieldGrid, Omega: float) -> InteractionReport:
    """Both sides of the helical power-flow theorem for a retarded/advanced pair.

    With S the starred advanced grid the balance reads

        ⟨∂z(E_R×H_S)_z⟩ + ⟨H_S·∂tB_R + E_R·∂tD_S⟩ = ⟨E_R·J_S⟩ + ⟨H_S·F_R⟩

    where J_S is the effective current of S and F_R = ∇̃×E_R + ∂tB_R the
    Faraday defect of R. It holds for arbitrary smooth fields once the transverse
    divergences average out over a periodic cell. The time-derivative term is
    split into the Ω-weighted volume term ⟨Ω(E_RᵀσD_S - H_RᵀσB_S)⟩ and the
    remaining carrier term. Terms are complex; the report holds real parts, the
    imbalance uses the complex residual normalised by ω·sqrt(W_R·W_S).

    Raises:
        GridMismatch: If the grids differ in sampling or the starred rotation
            differs from the retarded one.
        GridTooSmall: If any axis cannot support central differences.
    """
    gridS = star_grid(gridA)
    _check_pair(gridR, gridS)
    s = Stencil(gridR)
    dt_s, dz_s = gridS.displacement()

    flux_z = -inner(gridR.Et, sigma_apply(gridS.cBt))
    boundary = _mean(s.dz(flux_z))

    rate = _dot(s, gridS.cBt, gridS.cBz, s.dt_vec(gridR.cBt), s.dt(gridR.cBz)) + _dot(
        s, gridR.Et, gridR.Ez, s.dt_vec(dt_s), s.dt(dz_s)
    )
    total = _mean(rate)

    volume = Omega * _mean(
        inner(s.center_vec(gridR.Et), sigma_apply(s.center_vec(dt_s)))
        - inner(s.center_vec(gridR.cBt), sigma_apply(s.center_vec(gridS.cBt)))
    )

    current = effective_advanced_current(gridS)
    source = _mean(_dot(s, gridR.Et, gridR.Ez, current.Jt, current.Jz))

    faraday_t = _transverse_curl(s, gridR.Et, gridR.Ez) + s.dt_vec(gridR.cBt)
    faraday_z = s.curl(gridR.Et) + s.dt(gridR.cBz)
    defect = _mean(_dot(s, gridS.cBt, gridS.cBz, faraday_t, faraday_z))

    norm = gridR.omega * math.sqrt(_energy_norm(gridR, s) * _energy_norm(gridS, s))
    scale = norm if norm > 0.0 else 1.0
    imbalance = abs(boundary + total - source - defect) / scale
    logger.debug(
        "power balance: boundary=%.6g volume=%.6g source=%.6g defect=%.6g imbalance=%.3e",
        boundary.real, volume.real, source.real, defect.real, imbalance,
    )
    return InteractionReport(
        boundary=boundary.real,
        volume=volume.real,
        carrier=(total - volume).real,
        source=source.real,
        defect=defect.real,
        imbalance=imbalance,
    )


def interaction_energy(
    spec: PacketSpec,
    advanced_map: AdvancedMap | str = AdvancedMap.PHI90,
    nx: int = 32,
    ny: int = 32,
    nt: int = 64,
) -> InteractionEnergy:
    """Period-averaged Ω⟨D_RᵀσE_S - H_RᵀσB_S⟩ over the packet window.

    S is the starred advanced wave of the packet. The map φ = 90° yields
    Ω⟨D·E* + H·B*⟩, linear in M + ½; φ = 0 yields zero for linearly polarized modes.
    """
    advanced_map = AdvancedMap(advanced_map)
    packet = PacketSampler(spec, advanced_map)
    lattice = GridSpec.full_cell(
        spec.mode.profile, spec.mode.omega, nx=nx, ny=ny, nt=nt * spec.Q,
        periods=spec.Q, nz=1, t_start=-spec.tau1,
    )
    gridR = materialize(packet.retarded_sampler, lattice)
    gridS = star_grid(materialize(packet.advanced_sampler, lattice))
    _check_pair(gridR, gridS)

    dt_r, _ = gridR.displacement()
    value = spec.Omega * _mean(
        inner(dt_r, sigma_apply(gridS.Et)) - inner(gridR.cBt, sigma_apply(gridS.cBt))
    ).real
    classical = spec.mode.omega * _mean(
        inner(dt_r, gridR.Et.conj()) + inner(gridR.cBt, gridR.cBt.conj())
    ).real
    weight = spec.M + 0.5
    logger.debug("interaction energy M=%d map=%s value=%.12g", spec.M, advanced_map.value, value)
    return InteractionEnergy(
        M=spec.M,
        map=advanced_map.value,
        value=value,
        constant=value / weight,
        classical_form=classical,
    )


def complex_poynting_balance(grid: FieldGrid) -> PoyntingBalance:
    """⟨∂z(E×H*)_z⟩ against iω⟨n²|E|² - |H|²⟩ for a source-free grid (e^{+iωt} phasors).

    Cross-section averages are exact only on a full periodic cell, where the
    transverse divergence of E×H* integrates to zero.

    Raises:
        GridTooSmall: If any axis cannot support central differences.
    """
    s = Stencil(grid)
    h_conj = grid.cBt.conj()
    flux_z = grid.Et.x * h_conj.y - grid.Et.y * h_conj.x
    flux = _mean(s.dz(flux_z))

    e = s.center_vec(grid.Et)
    b = s.center_vec(grid.cBt)
    electric = float(np.mean(
        grid.n**2 * (np.abs(e.x) ** 2 + np.abs(e.y) ** 2 + np.abs(s.center(grid.Ez)) ** 2)
    ))
    magnetic = float(np.mean(np.abs(b.x) ** 2 + np.abs(b.y) ** 2 + np.abs(s.center(grid.cBz)) ** 2))
    stored = electric + magnetic
    if stored == 0.0:
        return PoyntingBalance(imbalance=0.0, electric=0.0, magnetic=0.0, energy_imbalance=0.0)

    residual = flux - 1j * grid.omega * (electric - magnetic)
    return PoyntingBalance(
        imbalance=abs(residual) / (abs(grid.omega) * stored),
        electric=electric,
        magnetic=magnetic,
        energy_imbalance=abs(electric - magnetic) / stored,
    )


def random_smooth_grid(
    spec: GridSpec,
    rng: np.random.Generator,
    theta: Array | None = None,
    n: float = 1.5,
    omega: float = 2.0 * math.pi,
    harmonics: int = 2,
    terms: int = 4,
) -> FieldGrid:
    """Band-limited random fields on a periodic cell, optionally tagged with a rotation.

    Each component is a sum of `terms` plane waves with transverse harmonics up to
    `harmonics`, carrier e^{iωt} and a random axial wavenumber below nω.
    """
    x, y, z, t = spec.mesh()
    lx, ly = spec.nx * spec.hx, spec.ny * spec.hy

    def component() -> Array:
        total = np.zeros(spec.shape, dtype=np.complex128)
        for _ in range(terms):
            p, q = rng.integers(-harmonics, harmonics + 1, size=2)
            k = rng.uniform(-n * omega, n * omega)
            c = complex(*rng.normal(size=2))
            phase = 2 * np.pi * (p * (x - spec.x0) / lx + q * (y - spec.y0) / ly)
            total = total + c * np.exp(1j * (phase + omega * t - k * z))
        return total

    return FieldGrid(
        spec=spec,
        Et=TransverseVec(component(), component()),
        cBt=TransverseVec(component(), component()),
        Ez=component(),
        cBz=component(),
        n=n,
        omega=omega,
        theta=theta,
    )
