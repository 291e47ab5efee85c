"""prahmlab - numerical lab for helically modulated retarded/advanced waveguide packets."""

__version__ = "1.0.0"

from prahmlab.core.models import CheckResult, VerificationReport
from prahmlab.packet import PacketSampler, PacketSpec, synth_packet
from prahmlab.waveguide import ModeKind, ModeSpec, mode_sampler

__all__ = [
    "__version__",
    "CheckResult",
    "ModeKind",
    "ModeSpec",
    "PacketSampler",
    "PacketSpec",
    "VerificationReport",
    "mode_sampler",
    "synth_packet",
]
