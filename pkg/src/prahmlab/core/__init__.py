"""Core module for prahmlab."""

from prahmlab.core.exceptions import (
    ConfigError,
    GridError,
    ModeError,
    PacketError,
    PrahmLabError,
    LadderError,
    TxLineError,
)
from prahmlab.core.models import (
    CheckResult,
    Comparison,
    ResidualReport,
    VerificationReport,
)

__all__ = [
    "PrahmLabError",
    "ConfigError",
    "ModeError",
    "GridError",
    "PacketError",
    "LadderError",
    "TxLineError",
    "CheckResult",
    "Comparison",
    "ResidualReport",
    "VerificationReport",
]
