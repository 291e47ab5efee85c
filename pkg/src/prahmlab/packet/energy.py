"""Window-averaged energy of the packet against its two constituents."""

import numpy as np

from prahmlab.algebra import SigmaRotation, rotate
from prahmlab.core.models import EnergyAdditivity
from prahmlab.packet.params import PacketSpec
from prahmlab.packet.synth import PacketSampler
from prahmlab.waveguide.modes import FieldSample

_TINY = 1e-300


def _squared(sample: FieldSample) -> np.ndarray:
    return (
        np.abs(sample.Et.x) ** 2
        + np.abs(sample.Et.y) ** 2
        + np.abs(sample.cBt.x) ** 2
        + np.abs(sample.cBt.y) ** 2
        + np.abs(sample.Ez) ** 2
        + np.abs(sample.cBz) ** 2
    )


def window_samples(spec: PacketSpec, samples: int = 256) -> np.ndarray:
    """Uniform τ samples on [-τ₁, τ₂), far endpoint excluded."""
    return -spec.tau1 + spec.tau0 * np.arange(samples) / samples


def energy_additivity_check(
    spec: PacketSpec,
    samples: int = 256,
    point: tuple[float, float] | None = None,
) -> EnergyAdditivity:
    """Compare ⟨⟨|Φ|²⟩⟩ with ⟨⟨|R|²⟩⟩ + ⟨⟨|A|²⟩⟩ over the window at one cross-section point.

    The cross terms oscillate at 2Ω and 2Ωτ₀ = (2M+1)·2π, so uniform sampling with
    more than 2M+1 points per window cancels them exactly.
    """
    packet = PacketSampler(spec)
    assert packet.base is not None
    x, y = point if point is not None else spec.mode.profile.reference_point()
    t = window_samples(spec, samples)
    z = np.zeros_like(t)

    lhs = float(np.mean(_squared(packet(x, y, z, t))))

    F = packet.base(x, y, z, t)
    R = packet.retarded_mod.rotation(t, z)
    A = SigmaRotation(spec.phi - spec.Omega * t)
    retarded = FieldSample(rotate(R, F.Et), rotate(R, F.cBt), F.Ez, F.cBz)
    advanced = FieldSample(rotate(A, F.Et), rotate(A, F.cBt), F.Ez, F.cBz)
    rhs = float(np.mean(_squared(retarded)) + np.mean(_squared(advanced)))

    return EnergyAdditivity(lhs=lhs, rhs=rhs, deviation=abs(lhs - rhs) / max(rhs, _TINY))
