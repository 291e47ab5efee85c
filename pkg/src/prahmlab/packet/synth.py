"""Synthesis of the windowed retarded + advanced packet field."""

import logging
from dataclasses import dataclass, field
from typing import Any, TypeAlias

import numpy as np
import numpy.typing as npt

from prahmlab.algebra import SigmaRotation, TransverseVec, polarization_ellipse, rotate, sigma_apply
from prahmlab.helical import HelicalModulation, HelicalSampler, apply_helical
from prahmlab.maxwell.grid import FieldMapping
from prahmlab.packet.params import AdvancedMap, PacketSpec, envelope
from prahmlab.waveguide.modes import FieldSample, ModeSpec, mode_sampler

logger = logging.getLogger(__name__)

Array: TypeAlias = npt.NDArray[Any]


def apply_map(advanced_map: AdvancedMap | str, sample: FieldSample) -> FieldSample:
    """Real-linear generator map; E-type components change sign."""
    advanced_map = AdvancedMap(advanced_map)
    turn = (lambda v: v) if advanced_map is AdvancedMap.PHI0 else sigma_apply
    return FieldSample(
        Et=-turn(sample.Et),
        cBt=turn(sample.cBt),
        Ez=-sample.Ez,
        cBz=sample.cBz,
        Dt=None if sample.Dt is None else -turn(sample.Dt),
        Dz=None if sample.Dz is None else -sample.Dz,
    )


def conj_sample(sample: FieldSample) -> FieldSample:
    return FieldSample(
        Et=sample.Et.conj(),
        cBt=sample.cBt.conj(),
        Ez=np.conj(sample.Ez),
        cBz=np.conj(sample.cBz),
        Dt=None if sample.Dt is None else sample.Dt.conj(),
        Dz=None if sample.Dz is None else np.conj(sample.Dz),
    )


@dataclass
class MappedSampler:
    """A mode mapping with an AdvancedMap applied to every sample."""

    base: FieldMapping
    advanced_map: AdvancedMap

    @property
    def mode(self) -> ModeSpec:
        return self.base.mode

    def __call__(
        self, x: npt.ArrayLike, y: npt.ArrayLike, z: npt.ArrayLike, t: npt.ArrayLike
    ) -> FieldSample:
        return apply_map(self.advanced_map, self.base(x, y, z, t))


@dataclass
class PacketSampler:
    """Windowed packet Φ = Θ(Ωτ)F + Θ(φ)Θ(-Ωτ)F with τ = t - z/v_g.

    Both terms share the generator F, so inside [-τ₁, τ₂]

        Φ_T = 2cos(Ωτ - φ/2)·Θ(φ/2)F_T,    Φ_z = 2cos(Ωτ - φ/2)·F_z

    and Φ vanishes outside. The advanced wave proper, A = Θ(-Ωτ)·map(F), and its
    starred form map(conj R) carry the map used for energy bookkeeping.
    """

    spec: PacketSpec
    advanced_map: AdvancedMap = AdvancedMap.PHI90
    base: FieldMapping | None = None
    retarded_mod: HelicalModulation = field(init=False)
    advanced_mod: HelicalModulation = field(init=False)

    def __post_init__(self) -> None:
        self.advanced_map = AdvancedMap(self.advanced_map)
        if self.base is None:
            self.base = mode_sampler(self.spec.mode)
        Omega = self.spec.Omega
        self.retarded_mod = HelicalModulation.matched(self.spec.mode, Omega, helicity=1)
        self.advanced_mod = HelicalModulation.matched(self.spec.mode, Omega, helicity=-1)
        logger.debug(
            "packet M=%d Q=%d Omega=%.6g window=[-%.6g, %.6g]",
            self.spec.M, self.spec.Q, Omega, self.spec.tau1, self.spec.tau2,
        )

    @property
    def mode(self) -> ModeSpec:
        return self.spec.mode

    @property
    def group_velocity(self) -> float:
        return self.retarded_mod.v_h

    def tau(self, z: npt.ArrayLike, t: npt.ArrayLike) -> Array:
        return np.asarray(t) - np.asarray(z) / self.group_velocity

    def envelope(self, tau: npt.ArrayLike) -> tuple[float, Array]:
        return envelope(self.spec, tau)

    @property
    def retarded_sampler(self) -> HelicalSampler:
        assert self.base is not None
        return apply_helical(self.base, self.retarded_mod)

    @property
    def advanced_sampler(self) -> HelicalSampler:
        assert self.base is not None
        return apply_helical(MappedSampler(self.base, self.advanced_map), self.advanced_mod)

    def retarded(self, x: npt.ArrayLike, y: npt.ArrayLike, z: npt.ArrayLike, t: npt.ArrayLike) -> FieldSample:
        """Θ(Ωτ)F, not windowed."""
        return self.retarded_sampler(x, y, z, t)

    def advanced(self, x: npt.ArrayLike, y: npt.ArrayLike, z: npt.ArrayLike, t: npt.ArrayLike) -> FieldSample:
        """Θ(-Ωτ)·map(F), not windowed."""
        return self.advanced_sampler(x, y, z, t)

    def advanced_starred(
        self, x: npt.ArrayLike, y: npt.ArrayLike, z: npt.ArrayLike, t: npt.ArrayLike
    ) -> FieldSample:
        """map(conj R): the advanced wave conjugated with its helicity reversed."""
        return apply_map(self.advanced_map, conj_sample(self.retarded(x, y, z, t)))

    def superposition(
        self, x: npt.ArrayLike, y: npt.ArrayLike, z: npt.ArrayLike, t: npt.ArrayLike
    ) -> FieldSample:
        """The literal windowed sum of both rotated terms (reference for __call__)."""
        assert self.base is not None
        F = self.base(x, y, z, t)
        tau = self.tau(z, t)
        R = self.retarded_mod.rotation(t, z)
        A = SigmaRotation(self.spec.phi - self.spec.Omega * tau)
        _, env = self.envelope(tau)
        inside = env != 0.0
        two_cos = 2.0 * np.cos(self.spec.Omega * tau - self.spec.phi / 2)
        return FieldSample(
            Et=(rotate(R, F.Et) + rotate(A, F.Et)) * inside,
            cBt=(rotate(R, F.cBt) + rotate(A, F.cBt)) * inside,
            Ez=F.Ez * two_cos * inside,
            cBz=F.cBz * two_cos * inside,
        )

    def __call__(
        self, x: npt.ArrayLike, y: npt.ArrayLike, z: npt.ArrayLike, t: npt.ArrayLike
    ) -> FieldSample:
        assert self.base is not None
        F = self.base(x, y, z, t)
        angle, env = self.envelope(self.tau(z, t))
        R = SigmaRotation(angle)
        weight = 2.0 * env
        return FieldSample(
            Et=rotate(R, F.Et) * weight,
            cBt=rotate(R, F.cBt) * weight,
            Ez=F.Ez * weight,
            cBz=F.cBz * weight,
        )


def synth_packet(spec: PacketSpec, advanced_map: AdvancedMap | str = AdvancedMap.PHI90) -> PacketSampler:
    """Packet mapping for `spec`; v_h = v_g is enforced by construction."""
    return PacketSampler(spec, AdvancedMap(advanced_map))


def polarization_deviation(packet: PacketSampler, x: float, y: float, taus: npt.ArrayLike) -> float:
    """Largest change of the transverse polarization ellipse inside the window.

    The packet orientation is compared with the base orientation advanced by φ/2
    (mod π); ellipticity is compared directly. Points where the envelope vanishes
    are skipped.
    """
    assert packet.base is not None
    t = np.asarray(taus, dtype=np.float64)
    z = np.zeros_like(t)
    _, env = packet.envelope(t)
    keep = np.abs(env) > 1e-6
    if not np.any(keep):
        return 0.0
    bare = packet.base(x, y, z[keep], t[keep])
    shaped = packet(x, y, z[keep], t[keep])

    worst = 0.0
    for a, b in ((bare.Et, shaped.Et), (bare.cBt, shaped.cBt)):
        psi_a, chi_a = polarization_ellipse(TransverseVec(np.asarray(a.x), np.asarray(a.y)))
        psi_b, chi_b = polarization_ellipse(TransverseVec(np.asarray(b.x), np.asarray(b.y)))
        shift = np.angle(np.exp(2j * (psi_b - psi_a - packet.spec.phi / 2))) / 2
        worst = max(worst, float(np.max(np.abs(shift))), float(np.max(np.abs(chi_b - chi_a))))
    return worst


def sigma_ratio_deviation(packet: PacketSampler, x: float, y: float, taus: npt.ArrayLike) -> float:
    """Max change of the pointwise ratio between σE_T and cB_T relative to the bare mode."""
    assert packet.base is not None
    t = np.asarray(taus, dtype=np.float64)
    z = np.zeros_like(t)
    _, env = packet.envelope(t)
    keep = np.abs(env) > 1e-6
    bare = packet.base(x, y, z[keep], t[keep])
    shaped = packet(x, y, z[keep], t[keep])

    def ratio(sample: FieldSample) -> Array:
        s = sigma_apply(sample.Et)
        num = s.x * np.conj(sample.cBt.x) + s.y * np.conj(sample.cBt.y)
        den = np.abs(sample.cBt.x) ** 2 + np.abs(sample.cBt.y) ** 2
        return np.asarray(num / den)

    return float(np.max(np.abs(ratio(shaped) - ratio(bare)))) if np.any(keep) else 0.0
