"""Resonance conditions, additivity, polarization, velocity, uncertainty and ground state."""

import itertools
import math
from dataclasses import replace

import numpy as np

from prahmlab.core.models import Comparison
from prahmlab.packet.energy import energy_additivity_check
from prahmlab.packet.ground import ground_demotion_dispersal
from prahmlab.packet.params import PacketSpec, envelope, packet_params
from prahmlab.packet.spectrum import spectrum_uncertainty
from prahmlab.packet.synth import PacketSampler, polarization_deviation
from prahmlab.packet.velocity import envelope_velocity_measure, velocity_mode
from prahmlab.verification.base import CheckCollector, VerificationSuite
from prahmlab.waveguide.modes import CombinedSampler

RESONANCE_M = range(6)
RESONANCE_PHI = (0.0, math.pi / 4, math.pi / 2)
ADDITIVITY_M = (0, 3)
VELOCITY_M = (0, 1, 2, 5)
DISPERSION_SLOPE = 1e-4
ELLIPTICAL_WEIGHT = 0.6 + 0.35j


class PacketSuite(VerificationSuite):
    NAME = "packet"

    def run(self, collector: CheckCollector) -> None:
        self._resonance(collector)
        self._additivity(collector)
        self._polarization(collector)
        self._velocity(collector)
        self._uncertainty(collector)
        self._ground(collector)

    def _resonance(self, collector: CheckCollector) -> None:
        omega = self.mode.omega
        exact = self.tolerance("packet.boundary")
        worst_omega = worst_span = worst_edge = 0.0
        for M, phi in itertools.product(RESONANCE_M, RESONANCE_PHI):
            p = packet_params(M, phi, omega)
            worst_omega = max(worst_omega, abs(p.Omega - (2 * M + 1) * omega / 2) / omega)
            worst_span = max(worst_span, abs(p.tau0 - 2 * math.pi / omega) * omega)
            spec = PacketSpec(M=M, mode=self.mode, phi=phi)
            _, edges = envelope(spec, np.array([-p.tau1, p.tau2]))
            worst_edge = max(worst_edge, float(np.max(np.abs(edges))))
        collector.check(self.NAME, "resonance.frequency", worst_omega, exact)
        collector.check(self.NAME, "resonance.window", worst_span, exact)
        collector.check(self.NAME, "resonance.boundary", worst_edge, exact)
        ground = packet_params(0, math.pi / 2, omega)
        collector.check(self.NAME, "resonance.degenerate_ground", abs(ground.degenerate_tau0), exact)

    def _additivity(self, collector: CheckCollector) -> None:
        for M in ADDITIVITY_M:
            spec = PacketSpec(M=M, mode=self.mode, phi=self.config.packet.phi)
            result = energy_additivity_check(spec)
            collector.check(
                self.NAME, f"additivity.M{M}", result.deviation, self.tolerance("packet.additivity")
            )

    def _polarization(self, collector: CheckCollector) -> None:
        base = CombinedSampler.from_mode(self.mode, ELLIPTICAL_WEIGHT)
        spec = PacketSpec(M=1, mode=self.mode, phi=self.config.packet.phi)
        packet = PacketSampler(spec, base=base)
        x, y = self.mode.profile.reference_point()
        taus = np.linspace(-spec.tau1, spec.tau2, 97)[1:-1]
        collector.check(
            self.NAME, "polarization.elliptical",
            polarization_deviation(packet, x, y, taus), self.tolerance("packet.polarization"),
        )

    def _velocity(self, collector: CheckCollector) -> None:
        phi = self.config.packet.phi
        for label, n1, key in (
            ("constant", 0.0, "packet.velocity"),
            ("dispersive", DISPERSION_SLOPE, "packet.dispersive_velocity"),
        ):
            mode = velocity_mode(self.mode, n1)
            reports = [envelope_velocity_measure(PacketSpec(M, mode, phi)) for M in VELOCITY_M]
            v_g = mode.group_velocity
            limit = self.tolerance(key)
            worst = max(abs(r.velocity - v_g) / v_g for r in reports)
            collector.check(self.NAME, f"velocity.{label}.group", worst, limit)
            if n1 == 0.0:
                speeds = [r.velocity for r in reports]
                spread = (max(speeds) - min(speeds)) / min(speeds)
                collector.check(self.NAME, f"velocity.{label}.spread", spread, limit)

    def _uncertainty(self, collector: CheckCollector) -> None:
        spec = PacketSpec(M=0, mode=self.mode, phi=self.config.packet.phi)
        single = spectrum_uncertainty(spec)
        quad = spectrum_uncertainty(replace(spec, Q=4))
        band = self.tolerance("packet.q_stability")
        collector.check(
            self.NAME, "uncertainty.product", single.product, (math.pi, 8 * math.pi),
            Comparison.WITHIN,
        )
        collector.check(
            self.NAME, "uncertainty.q_stability", abs(quad.product / single.product - 1.0), band
        )
        collector.check(
            self.NAME, "uncertainty.bandwidth_q4", single.delta_omega / quad.delta_omega,
            (4.0 * (1.0 - band), 4.0 * (1.0 + band)), Comparison.WITHIN,
        )

    def _ground(self, collector: CheckCollector) -> None:
        result = ground_demotion_dispersal(PacketSpec(M=0, mode=self.mode, phi=math.pi / 2))
        collector.check(
            self.NAME, "ground.relative_std", result.relative_std, self.tolerance("packet.ground")
        )
        collector.check(self.NAME, "ground.zero_count", result.zero_count, 0.0)
