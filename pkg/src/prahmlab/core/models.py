"""Report models for prahmlab."""

from enum import Enum

from pydantic import BaseModel, Field


class Comparison(str, Enum):
    """How a measured value is compared with its tolerance."""

    AT_MOST = "<="
    AT_LEAST = ">="
    WITHIN = "in"


class CheckResult(BaseModel):
    """One verified property."""

    name: str
    suite: str
    measured: float
    tolerance: float | tuple[float, float]
    comparison: Comparison = Comparison.AT_MOST
    passed: bool
    detail: str | None = None

    def tolerance_text(self) -> str:
        if isinstance(self.tolerance, tuple):
            low, high = self.tolerance
            return f"in [{low:.6g}, {high:.6g}]"
        return f"{self.comparison.value} {self.tolerance:.3g}"


class VerificationReport(BaseModel):
    """Aggregated results of one or more verification suites."""

    suites: list[str] = Field(default_factory=list)
    checks: list[CheckResult] = Field(default_factory=list)
    errors: list[tuple[str, str]] = Field(default_factory=list)

    @property
    def failed(self) -> list[CheckResult]:
        """Checks that did not pass."""
        return [check for check in self.checks if not check.passed]

    @property
    def all_passed(self) -> bool:
        return not self.failed and not self.errors

    @property
    def stats(self) -> dict[str, int]:
        """Get summary statistics."""
        return {
            "suites": len(self.suites),
            "total_checks": len(self.checks),
            "passed": len(self.checks) - len(self.failed),
            "failed": len(self.failed),
            "errors": len(self.errors),
        }

    def by_suite(self) -> dict[str, list[CheckResult]]:
        grouped: dict[str, list[CheckResult]] = {name: [] for name in self.suites}
        for check in self.checks:
            grouped.setdefault(check.suite, []).append(check)
        return grouped


class ResidualReport(BaseModel):
    """Normalised finite-difference residual norms, one entry per equation."""

    form: str
    l2: dict[str, float]
    linf: dict[str, float]
    scale: float
    spacing: float
    order: dict[str, float] | None = None

    @property
    def max_l2(self) -> float:
        return max(self.l2.values())

    @property
    def max_linf(self) -> float:
        return max(self.linf.values())


class SweepPoint(BaseModel):
    """Dominant curl-equation residual at one helical-velocity ratio."""

    ratio: float
    residual: float
    leftover: float


class PacketParams(BaseModel):
    """Resonant packet parameters and the discarded degenerate family."""

    M: int
    Q: int
    phi: float
    omega: float
    Omega: float
    tau1: float
    tau2: float
    family: str = "resonant"
    degenerate_Omega: float
    degenerate_tau0: float
    combined_residual: float = Field(
        description="Ω(τ₂-τ₁) - φ - (N-M-1)π evaluated with N = M+1",
    )

    @property
    def tau0(self) -> float:
        return self.tau1 + self.tau2


class EnergyAdditivity(BaseModel):
    lhs: float
    rhs: float
    deviation: float


class UncertaintyReport(BaseModel):
    """Width products of the packet envelope."""

    M: int
    Q: int
    delta_omega: float
    delta_t: float
    product: float
    rms_delta_omega: float
    rms_delta_t: float
    rms_product: float


class VelocityReport(BaseModel):
    """Envelope velocity measured by Fourier propagation of the two sidebands."""

    M: int
    velocity: float
    group_velocity: float
    distortion: float
    probes: int


class GroundDispersal(BaseModel):
    relative_std: float
    zero_count: int
    magnitude: float


class InteractionReport(BaseModel):
    """Terms of the helical power-flow balance and the interaction energy."""

    boundary: float
    volume: float
    carrier: float = 0.0
    source: float
    defect: float = 0.0
    imbalance: float
    M: int | None = None
    constant: float | None = None


class InteractionEnergy(BaseModel):
    M: int
    map: str
    value: float
    constant: float
    classical_form: float


class PoyntingBalance(BaseModel):
    """Cross-section complex Poynting balance of a source-free grid."""

    imbalance: float
    electric: float
    magnetic: float
    energy_imbalance: float
