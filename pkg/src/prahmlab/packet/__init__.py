"""Resonant retarded/advanced helical packets."""

from prahmlab.packet.energy import energy_additivity_check, window_samples
from prahmlab.packet.ground import ground_demotion_dispersal
from prahmlab.packet.params import AdvancedMap, PacketFamily, PacketSpec, envelope, packet_params
from prahmlab.packet.spectrum import spectrum_uncertainty
from prahmlab.packet.synth import (
    MappedSampler,
    PacketSampler,
    apply_map,
    conj_sample,
    polarization_deviation,
    sigma_ratio_deviation,
    synth_packet,
)
from prahmlab.packet.velocity import (
    DEFAULT_PROBES,
    VELOCITY_KAPPA_RATIO,
    beat_velocity_closed_form,
    envelope_velocity_measure,
    sideband_amplitudes,
    velocity_mode,
)

__all__ = [
    "DEFAULT_PROBES",
    "VELOCITY_KAPPA_RATIO",
    "AdvancedMap",
    "MappedSampler",
    "PacketFamily",
    "PacketSampler",
    "PacketSpec",
    "apply_map",
    "beat_velocity_closed_form",
    "conj_sample",
    "energy_additivity_check",
    "envelope",
    "envelope_velocity_measure",
    "ground_demotion_dispersal",
    "packet_params",
    "polarization_deviation",
    "sideband_amplitudes",
    "sigma_ratio_deviation",
    "spectrum_uncertainty",
    "synth_packet",
    "velocity_mode",
    "window_samples",
]
