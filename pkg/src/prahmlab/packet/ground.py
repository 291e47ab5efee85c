"""Demotion of the M = 0 packet: the trapping window disappears."""

import math

import numpy as np

from prahmlab.algebra import SigmaRotation, TransverseVec, rotate
from prahmlab.core.exceptions import DegenerateCancellation, NotGroundState
from prahmlab.core.models import GroundDispersal
from prahmlab.packet.params import PacketSpec


def ground_demotion_dispersal(spec: PacketSpec, samples: int = 256) -> GroundDispersal:
    """Magnitude of Θ(-ωτ/2)[a + Θ(φ)a] over one carrier period.

    `a` is the generator gradient at the profile's reference point. After the
    common rotation the combination no longer depends on τ, so its magnitude is
    constant and never vanishes unless φ = π.

    Raises:
        NotGroundState: If spec.M > 0.
        DegenerateCancellation: If the two terms cancel identically.
    """
    if spec.M != 0:
        raise NotGroundState(spec.M)
    x, y = spec.mode.profile.reference_point()
    gx, gy = spec.mode.profile.gradient(x, y)
    a = TransverseVec(np.float64(gx), np.float64(gy))
    combined = a + rotate(SigmaRotation(spec.phi), a)
    scale = float(a.norm())
    if float(combined.norm()) <= 1e-12 * scale:
        raise DegenerateCancellation(spec.phi)

    omega = spec.mode.omega
    tau = (2.0 * math.pi / omega) * np.arange(samples) / samples
    demoted = rotate(SigmaRotation(-0.5 * omega * tau), combined)
    magnitude = np.asarray(demoted.norm())
    mean = float(np.mean(magnitude))
    return GroundDispersal(
        relative_std=float(np.std(magnitude)) / mean,
        zero_count=int(np.count_nonzero(magnitude <= 1e-12 * scale)),
        magnitude=mean,
    )
