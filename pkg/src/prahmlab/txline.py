"""A shorted, lossless, one-wavelength transmission line charged by a sinusoidal current source.

SI units throughout. The line is modelled by its travelling waves: the source
launches a forward voltage wave f, the short returns b(t) = -f(t - 2τ₀), and
the source terminal sees V = f + b with line current (f - b)/Z₀. On a lossless
uniform line this delay-line model is exact.
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Any, TypeAlias

import numpy as np
import numpy.typing as npt
from scipy import constants

from prahmlab.core.exceptions import DurationTooShort, TxLineError

logger = logging.getLogger(__name__)

Array: TypeAlias = npt.NDArray[Any]

FREE_SPACE_IMPEDANCE = 377.0


class SourceModel(str, Enum):
    """How the source end treats the wave returning from the short.

    MATCHED: the source launches Z₀·I(t) until the first echo arrives; from then
    on the charged line presents a short at the input (V = 0), the echo is
    re-launched inverted and no net power flows.
    IDEAL: a pure current source, f = Z₀·I(t) + b, so energy sloshes back and
    forth between source and line.
    """

    MATCHED = "matched"
    IDEAL = "ideal"


@dataclass(frozen=True)
class TxLineSpec:
    Z0: float = FREE_SPACE_IMPEDANCE
    omega: float = 2.0 * math.pi
    current: float = 1.0
    steps_per_transit: int = 512
    source: SourceModel = SourceModel.MATCHED

    def __post_init__(self) -> None:
        if self.Z0 <= 0 or self.omega <= 0:
            raise TxLineError("Z0 and omega must be positive")
        if self.steps_per_transit < 2:
            raise TxLineError(f"steps_per_transit must be >= 2, got {self.steps_per_transit}")
        object.__setattr__(self, "source", SourceModel(self.source))

    @property
    def tau0(self) -> float:
        """One-way transit time, one carrier period."""
        return 2.0 * math.pi / self.omega

    @property
    def round_trip(self) -> float:
        return 2.0 * self.tau0

    @property
    def dt(self) -> float:
        return self.tau0 / self.steps_per_transit

    @property
    def length(self) -> float:
        """One wavelength at the speed of light."""
        return constants.c * self.tau0


@dataclass(frozen=True)
class EnergyTrace:
    """Time series of source power, delivered energy and energy stored on the line."""

    t: Array
    power: Array
    delivered: Array
    stored: Array

    def bookkeeping_error(self) -> float:
        return float(np.max(np.abs(self.delivered - self.stored)))

    def average_power(self, start: float, stop: float) -> float:
        """Mean source power over samples with start ≤ t < stop."""
        selected = (self.t >= start) & (self.t < stop)
        return float(np.mean(self.power[selected])) if np.any(selected) else 0.0


def _drive(spec: TxLineSpec, count: int) -> Array:
    return spec.Z0 * spec.current * np.cos(spec.omega * spec.dt * np.arange(count))


def simulate(spec: TxLineSpec, duration: float) -> EnergyTrace:
    """Run the bounce model for `duration` seconds.

    Stored energy is the energy of every wave launched during the last round
    trip, Σ f²·dt/Z₀, which is what the line holds at that instant.

    Raises:
        DurationTooShort: If duration is below one round trip 2τ₀.
    """
    if duration < spec.round_trip * (1.0 - 1e-12):
        raise DurationTooShort(duration, spec.round_trip)

    lag = 2 * spec.steps_per_transit
    count = int(round(duration / spec.dt))
    drive = _drive(spec, count)

    forward = np.zeros(count)
    if spec.source is SourceModel.MATCHED:
        forward[:lag] = drive[:lag]
        for start in range(lag, count, lag):
            stop = min(start + lag, count)
            forward[start:stop] = forward[start - lag : stop - lag]
    else:
        forward[:lag] = drive[:lag]
        for start in range(lag, count, lag):
            stop = min(start + lag, count)
            forward[start:stop] = drive[start:stop] - forward[start - lag : stop - lag]

    backward = np.zeros(count)
    backward[lag:] = -forward[:-lag]

    power = (forward**2 - backward**2) / spec.Z0
    delivered = np.cumsum(power) * spec.dt
    energy = np.cumsum(forward**2) * spec.dt / spec.Z0
    stored = energy.copy()
    stored[lag:] -= energy[:-lag]

    logger.debug(
        "txline %s: %d steps, dt=%.6g, final stored %.9g J",
        spec.source.value, count, spec.dt, stored[-1],
    )
    return EnergyTrace(t=spec.dt * np.arange(count), power=power, delivered=delivered, stored=stored)


def closed_form_energy(spec: TxLineSpec) -> float:
    """½I²Z₀·4π/ω."""
    return 0.5 * spec.current**2 * spec.Z0 * 4.0 * math.pi / spec.omega


def trapped_energy(spec: TxLineSpec) -> float:
    """Energy left on the line two round trips after switch-on."""
    return float(simulate(spec, 2.0 * spec.round_trip).stored[-1])


def planck_xi(zeta: float, omega: float = 2.0 * math.pi, Z0: float = FREE_SPACE_IMPEDANCE) -> float:
    """ξ/ζ² with U₀ = ξ·h·f for a source current I = ζ·ω·e.

    Raises:
        TxLineError: If zeta is not positive.
    """
    if zeta <= 0:
        raise TxLineError(f"zeta must be positive, got {zeta}")
    spec = TxLineSpec(Z0=Z0, omega=omega, current=zeta * omega * constants.e)
    quantum = constants.h * omega / (2.0 * math.pi)
    return trapped_energy(spec) / quantum / zeta**2


def planck_xi_closed_form(Z0: float = FREE_SPACE_IMPEDANCE) -> float:
    """4π²·Z₀·e²/h, independent of ω."""
    return 4.0 * math.pi**2 * Z0 * constants.e**2 / constants.h
