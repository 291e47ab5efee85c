"""Promotion and demotion between helical packet states Ψ_M = c·Θ((M+½)ωτ)F."""

import math
from collections.abc import Sequence
from dataclasses import dataclass, field, replace

import numpy as np
import numpy.typing as npt

from prahmlab.algebra import SigmaRotation, TransverseVec, rotate, sigma_apply
from prahmlab.core.exceptions import LadderError


@dataclass(frozen=True)
class LadderState:
    """coeff·Θ((M+½)ωτ)·base; coeff = 0 is the zero state."""

    M: int
    coeff: float = 1.0
    omega: float = 2.0 * math.pi
    base: TransverseVec = field(default_factory=lambda: TransverseVec(1.0, 0.0))

    def __post_init__(self) -> None:
        if self.M < 0:
            raise LadderError(f"M must be >= 0, got {self.M}")
        if self.coeff < 0:
            raise LadderError(f"coeff must be >= 0, got {self.coeff}")

    @property
    def is_zero(self) -> bool:
        return self.coeff == 0.0

    @property
    def helical_frequency(self) -> float:
        return (self.M + 0.5) * self.omega

    def field(self, tau: npt.ArrayLike) -> TransverseVec:
        angle = self.helical_frequency * np.asarray(tau, dtype=np.float64)
        return rotate(SigmaRotation(angle), self.base) * self.coeff


def promote(s: LadderState) -> LadderState:
    """A⁺Ψ_M = √(M+1)·Ψ_{M+1}."""
    return replace(s, M=s.M + 1, coeff=s.coeff * math.sqrt(s.M + 1))


def demote(s: LadderState) -> LadderState:
    """A⁻Ψ_M = √M·Ψ_{M-1}; A⁻Ψ₀ = 0."""
    if s.M == 0:
        return replace(s, coeff=0.0)
    return replace(s, M=s.M - 1, coeff=s.coeff * math.sqrt(s.M))


def _max_gap(a: TransverseVec, b: TransverseVec) -> float:
    return float(np.max(np.asarray((a - b).norm())))


def number_check(s: LadderState, taus: Sequence[float], step_fraction: float = 1e-4) -> float:
    """Deviation between A⁺A⁻Ψ from ladder arithmetic and its differential realisation.

    The differential form is Θ(½ωτ)·(1/ω)(-σ)·d/dτ·Θ(-½ωτ)Ψ with a central difference
    of step `step_fraction` of the helical period. The result is relative to the
    magnitude M·|coeff·base| of A⁺A⁻Ψ, or to |coeff·base| for M = 0.
    """
    tau = np.asarray(taus, dtype=np.float64)
    ladder = promote(demote(s)).field(tau)

    h = step_fraction * 2.0 * math.pi / s.helical_frequency

    def lowered(at: np.ndarray) -> TransverseVec:
        return rotate(SigmaRotation(-0.5 * s.omega * at), s.field(at))

    derivative = (lowered(tau + h) - lowered(tau - h)) * (1.0 / (2.0 * h))
    applied = sigma_apply(derivative) * (-1.0 / s.omega)
    differential = rotate(SigmaRotation(0.5 * s.omega * tau), applied)

    scale = max(s.M, 1) * s.coeff * float(np.asarray(s.base.norm()))
    if scale == 0.0:
        return _max_gap(ladder, differential)
    return _max_gap(ladder, differential) / scale


def commutator_check(s: LadderState) -> float:
    """|coeff of (A⁻A⁺ - A⁺A⁻)Ψ minus coeff of Ψ|; the commutator is the identity."""
    raised_first = demote(promote(s))
    lowered_first = promote(demote(s))
    return abs((raised_first.coeff - lowered_first.coeff) - s.coeff)


def energy_eigenvalue(s: LadderState) -> float:
    """½(A⁻A⁺ + A⁺A⁻) on a unit state of the same M: M + ½."""
    unit = replace(s, coeff=1.0)
    return 0.5 * (demote(promote(unit)).coeff + promote(demote(unit)).coeff)


def ladder_table(
    M_values: Sequence[int], taus: Sequence[float] | None = None, omega: float = 2.0 * math.pi
) -> list[dict[str, float]]:
    """Rows (M, coeff, number_dev, commutator_dev, energy) for unit states at carrier ω."""
    points = np.linspace(-0.5, 0.5, 17) if taus is None else np.asarray(taus)
    rows = []
    for M in M_values:
        s = LadderState(M=M, omega=omega)
        rows.append(
            {
                "M": M,
                "coeff": promote(s).coeff,
                "number_dev": number_check(s, points),
                "commutator_dev": commutator_check(s),
                "energy": energy_eigenvalue(s),
            }
        )
    return rows
