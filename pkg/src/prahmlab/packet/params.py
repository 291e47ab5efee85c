"""Resonance conditions of retarded/advanced helical packets."""

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np
import numpy.typing as npt

from prahmlab.core.exceptions import PacketError, PhiOutOfRange
from prahmlab.core.models import PacketParams
from prahmlab.waveguide.modes import ModeSpec


class PacketFamily(str, Enum):
    """Solutions of the two boundary zero conditions."""

    RESONANT = "resonant"  # N = M + 1
    DEGENERATE = "degenerate"  # N = M


class AdvancedMap(str, Enum):
    """Pairing of the advanced generator with the retarded one.

    phi0 maps {E, cB} → {-E, cB}; phi90 maps {E, cB} → {-σE, σcB}. Axial components
    follow the phi0 rule in both cases.
    """

    PHI0 = "phi0"
    PHI90 = "phi90"


def packet_params(M: int, phi: float, omega: float, Q: int = 1) -> PacketParams:
    """Ω, τ₁, τ₂ from the boundary conditions cos(Ωτ - φ/2) = 0 at τ = -τ₁ and τ = τ₂.

    Args:
        M: Excitation number, >= 0.
        phi: Fixed inter-wave rotation angle.
        omega: Carrier angular frequency.
        Q: Whole carrier periods trapped in the window.

    Returns:
        Packet parameters including the degenerate (N = M) family for reference.

    Raises:
        PhiOutOfRange: If |φ| >= (2M+1)π.
    """
    if M < 0:
        raise PacketError(f"M must be >= 0, got {M}")
    if Q < 1:
        raise PacketError(f"Q must be >= 1, got {Q}")
    if abs(phi) >= (2 * M + 1) * math.pi:
        raise PhiOutOfRange(phi, M)

    Omega = (2 * M + 1) * omega / (2 * Q)
    half_turns = (M + 0.5) * math.pi
    tau1 = (half_turns - phi / 2) / Omega
    tau2 = (half_turns + phi / 2) / Omega
    # N = M + 1 in Ω(τ₂ - τ₁) - φ = (N - M - 1)π
    combined = Omega * (tau2 - tau1) - phi
    return PacketParams(
        M=M,
        Q=Q,
        phi=phi,
        omega=omega,
        Omega=Omega,
        tau1=tau1,
        tau2=tau2,
        family=PacketFamily.RESONANT.value,
        degenerate_Omega=Omega,
        degenerate_tau0=2 * M * math.pi / Omega,
        combined_residual=combined,
    )


@dataclass(frozen=True)
class PacketSpec:
    """Excitation M, trapped periods Q and inter-wave angle φ on a base mode."""

    M: int
    mode: ModeSpec
    phi: float = math.pi / 2
    Q: int = 1

    @property
    def params(self) -> PacketParams:
        return packet_params(self.M, self.phi, self.mode.omega, self.Q)

    @property
    def Omega(self) -> float:
        return self.params.Omega

    @property
    def tau1(self) -> float:
        return self.params.tau1

    @property
    def tau2(self) -> float:
        return self.params.tau2

    @property
    def tau0(self) -> float:
        return self.params.tau0

    def with_M(self, M: int) -> "PacketSpec":
        return PacketSpec(M=M, mode=self.mode, phi=self.phi, Q=self.Q)


def envelope(spec: PacketSpec, tau: npt.ArrayLike) -> tuple[float, npt.NDArray[np.float64]]:
    """Rotation angle φ/2 and scalar factor cos(Ωτ - φ/2), zero outside [-τ₁, τ₂]."""
    p = spec.params
    tau = np.asarray(tau, dtype=np.float64)
    value = np.cos(p.Omega * tau - p.phi / 2)
    inside = (tau >= -p.tau1) & (tau <= p.tau2)
    return p.phi / 2, np.where(inside, value, 0.0)
