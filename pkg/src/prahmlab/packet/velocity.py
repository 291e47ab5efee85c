"""Envelope velocity by Fourier propagation of the two helical sidebands."""

import logging
import math
from collections.abc import Sequence

import numpy as np

from prahmlab.algebra import circular_components
from prahmlab.core.exceptions import NeedTwoProbes
from prahmlab.core.models import VelocityReport
from prahmlab.packet.params import PacketSpec
from prahmlab.waveguide.modes import ModeSpec, mode_sampler, signed_wavenumber

logger = logging.getLogger(__name__)

DEFAULT_PROBES: tuple[float, ...] = tuple(np.linspace(0.0, 0.2, 21))
#: Narrow profile so that the ω - Ω sideband of M = 0 still propagates.
VELOCITY_KAPPA_RATIO = 0.02


def velocity_mode(mode: ModeSpec, n1: float | None = None) -> ModeSpec:
    """Copy of `mode` with κ = 0.02·nω; `n1` overrides the dispersion slope."""
    return ModeSpec.canonical(
        kind=mode.kind,
        kappa_ratio=VELOCITY_KAPPA_RATIO,
        n0=mode.refr.n0,
        n1=mode.refr.n1 if n1 is None else n1,
        omega=mode.omega,
        profile_kind=mode.profile.KIND,
        amplitude=mode.amplitude,
        modal_phase=mode.modal_phase,
    )


def sideband_amplitudes(spec: PacketSpec) -> tuple[np.ndarray, np.ndarray]:
    """Circular-basis Jones vectors (u+, u- components) of the ω+Ω and ω-Ω sidebands.

    With F = a+u+ + a-u- at the reference point, Θ(θ)u± = e^{±iθ}u± splits the
    packet into V+ = (a+, a-e^{-iφ}) at ω+Ω and V- = (a+e^{iφ}, a-) at ω-Ω.
    """
    x, y = spec.mode.profile.reference_point()
    sample = mode_sampler(spec.mode)(x, y, 0.0, 0.0)
    a_plus, a_minus = circular_components(sample.Et)
    a_plus, a_minus = complex(a_plus), complex(a_minus)
    upper = np.array([a_plus, a_minus * np.exp(-1j * spec.phi)])
    lower = np.array([a_plus * np.exp(1j * spec.phi), a_minus])
    return upper, lower


def envelope_velocity_measure(
    spec: PacketSpec,
    z_probes: Sequence[float] = DEFAULT_PROBES,
    samples: int = 128,
) -> VelocityReport:
    """Velocity of the 2Ω intensity beat between the propagated sidebands.

    Each sideband ω' = ω ± Ω propagates with sign(ω')·k(|ω'|) at constant κ. At
    every probe the beat phase arg Σ_t I(t)e^{-i2Ωt} over one beat period locates
    the envelope in time; the velocity is the inverse slope of a linear fit of
    arrival time against z. Distortion is the largest change of modulation depth
    between probes.

    Raises:
        NeedTwoProbes: If fewer than two distinct probe positions are given.
        BelowCutoff: If either sideband does not propagate.
    """
    z = np.unique(np.asarray(z_probes, dtype=np.float64))
    if z.size < 2:
        raise NeedTwoProbes(int(z.size))

    mode = spec.mode
    Omega = spec.Omega
    omega_up, omega_down = mode.omega + Omega, mode.omega - Omega
    k_up = signed_wavenumber(omega_up, mode.refr, mode.kappa)
    k_down = signed_wavenumber(omega_down, mode.refr, mode.kappa)
    upper, lower = sideband_amplitudes(spec)

    beat = math.pi / Omega
    t = beat * np.arange(samples) / samples
    carrier = np.exp(-2j * Omega * t)

    arrivals = np.empty(z.size)
    depth = np.empty(z.size)
    for i, zi in enumerate(z):
        field = (
            upper[:, None] * np.exp(1j * (omega_up * t - k_up * zi))[None, :]
            + lower[:, None] * np.exp(1j * (omega_down * t - k_down * zi))[None, :]
        )
        intensity = np.sum(np.abs(field) ** 2, axis=0)
        c = np.sum(intensity * carrier)
        arrivals[i] = np.angle(c)
        depth[i] = 2.0 * abs(c) / abs(np.sum(intensity))

    arrivals = -np.unwrap(arrivals) / (2.0 * Omega)
    slope = np.polyfit(z, arrivals, 1)[0]
    velocity = 1.0 / slope
    report = VelocityReport(
        M=spec.M,
        velocity=float(velocity),
        group_velocity=mode.group_velocity,
        distortion=float(np.max(np.abs(depth - depth[0]))),
        probes=int(z.size),
    )
    logger.debug("envelope velocity M=%d v=%.9g v_g=%.9g", spec.M, report.velocity, report.group_velocity)
    return report


def beat_velocity_closed_form(spec: PacketSpec) -> float:
    """2Ω / (k(ω+Ω) - k(ω-Ω)), the exact beat velocity."""
    mode = spec.mode
    k_up = signed_wavenumber(mode.omega + spec.Omega, mode.refr, mode.kappa)
    k_down = signed_wavenumber(mode.omega - spec.Omega, mode.refr, mode.kappa)
    return 2.0 * spec.Omega / (k_up - k_down)
