"""Configuration for prahmlab."""

import logging
import math
from dataclasses import dataclass, field
from pathlib import Path

from pydantic import TypeAdapter, ValidationError

from prahmlab.core.exceptions import ConfigError, ModeError
from prahmlab.maxwell.grid import GridSpec
from prahmlab.waveguide.modes import ModeKind, ModeSpec, RefractiveModel
from prahmlab.waveguide.profiles import ProfileKind, build_profile

logger = logging.getLogger(__name__)

DEFAULT_TOLERANCES: dict[str, float] = {
    # maxwell
    "maxwell.residual": 1e-3,
    "maxwell.order": 0.3,
    "maxwell.symmetry": 1e-12,
    # helical
    "helical.residual": 1e-3,
    "helical.dispersive_residual": 5e-3,
    "helical.sweep_factor": 50.0,
    "helical.energy": 1e-12,
    # packet
    "packet.boundary": 1e-12,
    "packet.additivity": 1e-8,
    "packet.polarization": 1e-10,
    "packet.velocity": 1e-3,
    "packet.dispersive_velocity": 5e-3,
    "packet.q_stability": 0.2,
    "packet.ground": 1e-12,
    # interaction
    "interaction.zero_map": 1e-12,
    "interaction.ratio": 1e-6,
    "interaction.balance": 1e-3,
    "interaction.poynting": 1e-3,
    # ladder
    "ladder.exact": 1e-12,
    "ladder.number": 1e-6,
    # txline
    "txline.energy": 5e-3,
    "txline.ceased": 1e-6,
    "txline.xi": 0.01,
}

ADVANCED_MAPS = ("phi0", "phi90")
SOURCE_MODELS = ("matched", "ideal")


@dataclass
class ModeConfig:
    """Waveguide mode parameters (natural units)."""

    kind: ModeKind = ModeKind.TE
    n0: float = 1.5
    n1: float = 0.0
    omega_ref: float = 2.0 * math.pi
    omega: float = 2.0 * math.pi
    kappa_ratio: float = 0.6
    profile: ProfileKind = ProfileKind.SEPARABLE_COSINE
    aspect: float = 1.0
    order: int = 1
    amplitude: float = 1.0
    modal_phase: float = 0.0

    def build(self) -> ModeSpec:
        """Assemble the ModeSpec; κ = kappa_ratio·n(ω)·ω."""
        refr = RefractiveModel(n0=self.n0, n1=self.n1, omega_ref=self.omega_ref)
        kappa = self.kappa_ratio * refr.index(self.omega) * self.omega
        profile = build_profile(self.profile, kappa, aspect=self.aspect, order=self.order)
        return ModeSpec.build(
            self.kind, self.omega, refr, profile, self.amplitude, self.modal_phase
        )


@dataclass
class GridConfig:
    """Residual grid; defaults are the canonical 32×32×64 lattice."""

    nx: int = 32
    ny: int = 32
    nt: int = 64
    hx: float = 0.015
    hy: float = 0.015
    ht: float = 0.0025
    hz: float = 0.0025

    def spec(self) -> GridSpec:
        return GridSpec(
            nx=self.nx, ny=self.ny, nt=self.nt, hx=self.hx, hy=self.hy, ht=self.ht, hz=self.hz
        )


@dataclass
class PacketConfig:
    """Resonant packet parameters."""

    M: list[int] = field(default_factory=lambda: [0, 1, 2, 3])
    phi: float = math.pi / 2
    Q: int = 1
    advanced_map: str = "phi90"


@dataclass
class TxLineConfig:
    """Shorted-line source parameters (SI units)."""

    Z0: float = 377.0
    current: float = 1.0
    omega: float = 2.0 * math.pi
    steps_per_transit: int = 512
    source: str = "matched"


@dataclass
class OutputConfig:
    """Output locations."""

    out: Path | None = None
    report: Path | None = None

    def __post_init__(self) -> None:
        """Ensure paths are Path objects."""
        if isinstance(self.out, str):
            self.out = Path(self.out)
        if isinstance(self.report, str):
            self.report = Path(self.report)


@dataclass
class RunConfig:
    """Configuration for a prahmlab run. Every key is optional."""

    # Physics
    mode: ModeConfig = field(default_factory=ModeConfig)
    packet: PacketConfig = field(default_factory=PacketConfig)
    txline: TxLineConfig = field(default_factory=TxLineConfig)

    # Sampling
    grid: GridConfig = field(default_factory=GridConfig)

    # Checks
    tolerances: dict[str, float] = field(default_factory=dict)

    # Output settings
    output: OutputConfig = field(default_factory=OutputConfig)

    @classmethod
    def from_file(cls, path: Path | str) -> "RunConfig":
        """Load a JSON document.

        Raises:
            ConfigError: If the file cannot be read or does not match the schema.
        """
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"cannot read config {path}: {e}") from e
        try:
            config = TypeAdapter(cls).validate_json(text)
        except ValidationError as e:
            raise ConfigError(f"invalid config {path}: {e}") from e
        logger.debug("loaded config from %s", path)
        return config

    def tolerance(self, name: str) -> float:
        return self.tolerances.get(name, DEFAULT_TOLERANCES[name])

    def validate(self) -> ModeSpec:
        """Check module preconditions and return the built mode.

        Raises:
            ConfigError: On the first violated precondition.
        """
        if self.mode.kappa_ratio <= 0:
            raise ConfigError("kappa must be positive (kappa_ratio > 0)", key="mode.kappa_ratio")
        try:
            mode = self.mode.build()
        except ModeError as e:
            raise ConfigError(str(e), key="mode") from e

        g = self.grid
        if min(g.nx, g.ny, g.nt) < 3:
            raise ConfigError("grid needs at least 3 samples per axis", key="grid")
        if min(g.hx, g.hy, g.ht, g.hz) <= 0:
            raise ConfigError("grid spacings must be positive", key="grid")

        p = self.packet
        if not p.M or min(p.M) < 0:
            raise ConfigError("packet M values must be non-negative integers", key="packet.M")
        if p.Q < 1:
            raise ConfigError(f"Q must be >= 1, got {p.Q}", key="packet.Q")
        if abs(p.phi) >= (2 * min(p.M) + 1) * math.pi:
            raise ConfigError(f"phi = {p.phi} outside (-(2M+1)pi, (2M+1)pi)", key="packet.phi")
        if p.advanced_map not in ADVANCED_MAPS:
            raise ConfigError(f"unknown advanced map {p.advanced_map!r}", key="packet.advanced_map")

        t = self.txline
        if t.Z0 <= 0 or t.omega <= 0 or t.steps_per_transit < 1:
            raise ConfigError("txline Z0, omega and steps_per_transit must be positive", key="txline")
        if t.source not in SOURCE_MODELS:
            raise ConfigError(f"unknown source model {t.source!r}", key="txline.source")

        unknown = sorted(set(self.tolerances) - set(DEFAULT_TOLERANCES))
        if unknown:
            raise ConfigError(f"unknown tolerance keys: {', '.join(unknown)}", key="tolerances")
        return mode
