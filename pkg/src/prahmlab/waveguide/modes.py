"""TE/TM modal fields of a uniform dielectric guide (natural units c = ε₀ = μ₀ = 1)."""

import logging
import math
from dataclasses import dataclass, field, replace
from enum import Enum

import numpy as np
import numpy.typing as npt

from prahmlab.algebra import ComplexLike, PhasorConvention, TransverseVec, sigma_apply
from prahmlab.core.exceptions import BelowCutoff, KappaZero, ModeError
from prahmlab.waveguide.profiles import ProfileKind, TransverseProfile, build_profile

logger = logging.getLogger(__name__)

TWO_PI = 2.0 * math.pi


class ModeKind(str, Enum):
    """Mode families."""

    TE = "TE"
    TM = "TM"


@dataclass(frozen=True)
class RefractiveModel:
    """n(ω) = n0 + n1·(|ω| - omega_ref); μ_r = 1 and ε_r = n²."""

    n0: float = 1.5
    n1: float = 0.0
    omega_ref: float = TWO_PI

    def index(self, omega: float) -> float:
        n = self.n0 + self.n1 * (abs(omega) - self.omega_ref)
        if n <= 1e-9:
            raise ModeError(f"refractive index {n:.6g} not positive at omega = {omega:.6g}")
        return n

    @property
    def dispersive(self) -> bool:
        return self.n1 != 0.0


def axial_wavenumber(omega: float, refr: RefractiveModel, kappa: float) -> float:
    """k = sqrt(n²ω² - κ²) for |ω|; raises BelowCutoff at or below cutoff."""
    n = refr.index(omega)
    k2 = (n * omega) ** 2 - kappa**2
    if k2 <= 0:
        raise BelowCutoff(omega, kappa, n)
    return math.sqrt(k2)


def signed_wavenumber(omega: float, refr: RefractiveModel, kappa: float) -> float:
    """sign(ω)·k(|ω|), the propagation constant of a negative-frequency component."""
    return math.copysign(axial_wavenumber(abs(omega), refr, kappa), omega)


def group_velocity(omega: float, refr: RefractiveModel, kappa: float) -> float:
    """dω/dk at constant κ.

    Closed form k/(n²ω) for a constant index; otherwise a central difference of k(ω)
    with relative step 1e-6.
    """
    k = axial_wavenumber(omega, refr, kappa)
    if not refr.dispersive:
        return k / (refr.index(omega) ** 2 * omega)
    step = 1e-6 * omega
    dk = axial_wavenumber(omega + step, refr, kappa) - axial_wavenumber(omega - step, refr, kappa)
    return 2.0 * step / dk


def phase_velocity(omega: float, refr: RefractiveModel, kappa: float) -> float:
    return omega / axial_wavenumber(omega, refr, kappa)


@dataclass(frozen=True)
class FieldSample:
    """Six field components at a set of points; c·B shares E's scale.

    `Dt`/`Dz` are only filled when the displacement is not n(ω)²E (dispersive
    modulated fields).
    """

    Et: TransverseVec
    cBt: TransverseVec
    Ez: ComplexLike
    cBz: ComplexLike
    Dt: TransverseVec | None = None
    Dz: ComplexLike | None = None


@dataclass(frozen=True)
class ModeSpec:
    """A propagating TE or TM mode."""

    kind: ModeKind
    omega: float
    refr: RefractiveModel
    profile: TransverseProfile
    k: float
    amplitude: float = 1.0
    modal_phase: float = 0.0

    @classmethod
    def build(
        cls,
        kind: ModeKind | str,
        omega: float,
        refr: RefractiveModel,
        profile: TransverseProfile,
        amplitude: float = 1.0,
        modal_phase: float = 0.0,
    ) -> "ModeSpec":
        """Derive k from the dispersion relation and assemble the mode."""
        k = axial_wavenumber(omega, refr, profile.kappa)
        logger.debug("mode %s: omega=%.6g kappa=%.6g k=%.6g", kind, omega, profile.kappa, k)
        return cls(ModeKind(kind), omega, refr, profile, k, amplitude, modal_phase)

    @classmethod
    def canonical(
        cls,
        kind: ModeKind | str = ModeKind.TE,
        kappa_ratio: float = 0.6,
        n0: float = 1.5,
        n1: float = 0.0,
        omega: float = TWO_PI,
        profile_kind: ProfileKind | str = ProfileKind.SEPARABLE_COSINE,
        amplitude: float = 1.0,
        modal_phase: float = 0.0,
    ) -> "ModeSpec":
        """Reference mode: ω = 2π, n = 1.5, κ = kappa_ratio·nω."""
        refr = RefractiveModel(n0=n0, n1=n1, omega_ref=omega)
        kappa = kappa_ratio * refr.index(omega) * omega
        return cls.build(kind, omega, refr, build_profile(profile_kind, kappa), amplitude, modal_phase)

    @property
    def kappa(self) -> float:
        return self.profile.kappa

    @property
    def index(self) -> float:
        return self.refr.index(self.omega)

    @property
    def group_velocity(self) -> float:
        return group_velocity(self.omega, self.refr, self.kappa)

    @property
    def phase_velocity(self) -> float:
        return self.omega / self.k

    @property
    def phasor(self) -> PhasorConvention:
        return PhasorConvention(self.omega, self.k, self.modal_phase)

    def with_amplitude(self, amplitude: float) -> "ModeSpec":
        return ModeSpec(self.kind, self.omega, self.refr, self.profile, self.k, amplitude, self.modal_phase)


@dataclass
class ModeSampler:
    """Pure mapping (x, y, z, t) → FieldSample for one mode; arrays broadcast."""

    mode: ModeSpec
    _inv_kappa2: float = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.mode.kappa <= 0:
            raise KappaZero()
        self._inv_kappa2 = 1.0 / self.mode.kappa**2

    def __call__(
        self,
        x: npt.ArrayLike,
        y: npt.ArrayLike,
        z: npt.ArrayLike,
        t: npt.ArrayLike,
    ) -> FieldSample:
        mode = self.mode
        p = mode.amplitude * mode.phasor.phasor(np.asarray(t), np.asarray(z))
        a = mode.profile.value(x, y) * p
        gx, gy = mode.profile.gradient(x, y)
        grad = TransverseVec(gx * p, gy * p)
        zero = np.zeros(np.broadcast(a, grad.x).shape, dtype=np.complex128)

        if mode.kind is ModeKind.TE:
            cbt = grad * (-1j * mode.k * self._inv_kappa2)
            et = sigma_apply(grad) * (1j * mode.omega * self._inv_kappa2)
            return FieldSample(Et=et, cBt=cbt, Ez=zero, cBz=a + zero)

        n2 = mode.index**2
        et = grad * (-1j * mode.k * self._inv_kappa2)
        cbt = sigma_apply(grad) * (-1j * mode.omega * n2 * self._inv_kappa2)
        return FieldSample(Et=et, cBt=cbt, Ez=a + zero, cBz=zero)


def te_mode_sampler(spec: ModeSpec) -> ModeSampler:
    """cB_z = A·P, cB_T = -ik∇A·P/κ², E_T = iωσ∇A·P/κ², E_z = 0."""
    if spec.kind is not ModeKind.TE:
        raise ModeError(f"expected a TE mode, got {spec.kind.value}")
    return ModeSampler(spec)


def tm_mode_sampler(spec: ModeSpec) -> ModeSampler:
    """E_z = A·P, E_T = -ik∇A·P/κ², cB_T = -iωn²σ∇A·P/κ², cB_z = 0."""
    if spec.kind is not ModeKind.TM:
        raise ModeError(f"expected a TM mode, got {spec.kind.value}")
    return ModeSampler(spec)


def mode_sampler(spec: ModeSpec) -> ModeSampler:
    """Sampler for either family."""
    return te_mode_sampler(spec) if spec.kind is ModeKind.TE else tm_mode_sampler(spec)


def build_mode(
    kind: ModeKind | str,
    omega: float,
    refr: RefractiveModel,
    profile: TransverseProfile,
    amplitude: float = 1.0,
    modal_phase: float = 0.0,
) -> ModeSpec:
    return ModeSpec.build(kind, omega, refr, profile, amplitude, modal_phase)


@dataclass
class CombinedSampler:
    """TE + weight·TM on a shared profile; a complex weight gives elliptical polarization."""

    te: ModeSampler
    tm: ModeSampler
    weight: complex = 1j

    def __post_init__(self) -> None:
        if self.te.mode.kind is not ModeKind.TE or self.tm.mode.kind is not ModeKind.TM:
            raise ModeError("combined sampler needs one TE and one TM mode")
        if not math.isclose(self.te.mode.k, self.tm.mode.k, rel_tol=1e-12):
            raise ModeError("combined modes must share omega, index and kappa")

    @classmethod
    def from_mode(cls, mode: ModeSpec, weight: complex = 1j) -> "CombinedSampler":
        te = replace(mode, kind=ModeKind.TE)
        tm = replace(mode, kind=ModeKind.TM)
        return cls(ModeSampler(te), ModeSampler(tm), weight)

    @property
    def mode(self) -> ModeSpec:
        return self.te.mode

    def __call__(
        self,
        x: npt.ArrayLike,
        y: npt.ArrayLike,
        z: npt.ArrayLike,
        t: npt.ArrayLike,
    ) -> FieldSample:
        a = self.te(x, y, z, t)
        b = self.tm(x, y, z, t)
        w = self.weight
        return FieldSample(
            Et=a.Et + b.Et * w,
            cBt=a.cBt + b.cBt * w,
            Ez=a.Ez + b.Ez * w,
            cBz=a.cBz + b.cBz * w,
        )
