"""Interaction energy, helical power-flow balance, complex Poynting balance and J_eff."""

import math
from dataclasses import replace

import numpy as np

from prahmlab.core.models import Comparison
from prahmlab.helical import HelicalModulation, apply_helical
from prahmlab.interaction import (
    complex_poynting_balance,
    effective_advanced_current,
    helical_power_balance,
    interaction_energy,
    mapped_advanced_grid,
    random_smooth_grid,
)
from prahmlab.maxwell.grid import GridSpec, materialize
from prahmlab.packet.params import AdvancedMap, PacketSpec
from prahmlab.packet.synth import PacketSampler
from prahmlab.verification.base import CheckCollector, VerificationSuite
from prahmlab.waveguide.modes import ModeKind, mode_sampler

RANDOM_PAIRS = 10
RANDOM_SEED = 20240611


class InteractionSuite(VerificationSuite):
    NAME = "interaction"

    def run(self, collector: CheckCollector) -> None:
        self._energy(collector)
        self._balance(collector)
        self._poynting(collector)
        self._current(collector)

    def _energy(self, collector: CheckCollector) -> None:
        M_values = sorted(self.config.packet.M)
        phi = self.config.packet.phi
        ratio_limit = self.tolerance("interaction.ratio")
        zero_limit = self.tolerance("interaction.zero_map")

        values = []
        for M in M_values:
            spec = PacketSpec(M=M, mode=self.mode, phi=phi, Q=self.config.packet.Q)
            turned = interaction_energy(spec, AdvancedMap.PHI90)
            flat = interaction_energy(spec, AdvancedMap.PHI0)
            scale = (M + 0.5) * turned.classical_form
            collector.check(self.NAME, f"energy.phi0.M{M}", abs(flat.value) / scale, zero_limit)
            values.append(turned.value)

        weights = np.array([M + 0.5 for M in M_values])
        energies = np.array(values)
        base = energies[0] / weights[0]
        for M, weight, value in zip(M_values[1:], weights[1:], energies[1:], strict=True):
            collector.check(
                self.NAME, f"energy.phi90.ratio.M{M}",
                abs(value / energies[0] - weight / weights[0]) / (weight / weights[0]), ratio_limit,
            )
        if len(M_values) >= 2:
            slope, intercept = np.polyfit(weights, energies, 1)
            residual = energies - (slope * weights + intercept)
            collector.check(
                self.NAME, "energy.phi90.linear_fit",
                float(np.linalg.norm(residual) / np.linalg.norm(energies)), ratio_limit,
            )
        expected = self.mode.omega * self._quadratic_form() / self.config.packet.Q
        collector.check(
            self.NAME, "energy.phi90.constant", abs(base - expected) / abs(base), ratio_limit,
            detail="per-quantum constant equals ω times the period-averaged quadratic form",
        )

    def _balance(self, collector: CheckCollector) -> None:
        limit = self.tolerance("interaction.balance")
        mode = self.mode
        spec = PacketSpec(M=0, mode=mode, phi=self.config.packet.phi)
        packet = PacketSampler(spec)
        lattice = GridSpec.full_cell(mode.profile, mode.omega, nt=64, ghost_t=True)
        retarded = materialize(packet.retarded_sampler, lattice)
        for advanced_map in AdvancedMap:
            report = helical_power_balance(
                retarded, mapped_advanced_grid(retarded, advanced_map), spec.Omega
            )
            collector.check(self.NAME, f"balance.mode.{advanced_map.value}", report.imbalance, limit)
        report = helical_power_balance(
            retarded, materialize(packet.advanced_sampler, lattice), spec.Omega
        )
        collector.check(self.NAME, "balance.mode.advanced_wave", report.imbalance, limit)

        coarse = GridSpec.full_cell(
            mode.profile, mode.omega, nx=16, ny=16, nt=32, ghost_t=True, hz=1e-3
        )
        v = mode.group_velocity
        worst = 0.0
        orders = []
        for pair in range(RANDOM_PAIRS):
            imbalances = []
            for lattice in (coarse, coarse.refined()):
                theta = spec.Omega * (lattice.t()[None, :] - lattice.z()[:, None] / v)
                rng = np.random.default_rng(RANDOM_SEED + pair)
                gridR = random_smooth_grid(lattice, rng, theta=theta, n=mode.index, omega=mode.omega)
                gridA = random_smooth_grid(lattice, rng, theta=-theta, n=mode.index, omega=mode.omega)
                imbalances.append(helical_power_balance(gridR, gridA, spec.Omega).imbalance)
            worst = max(worst, imbalances[0])
            orders.append(math.log2(imbalances[0] / imbalances[1]))
        collector.check(self.NAME, "balance.random.imbalance", worst, limit)
        band = self.tolerance("maxwell.order")
        collector.check(
            self.NAME, "balance.random.order", float(np.min(orders)),
            (2.0 - band, 2.0 + band), Comparison.WITHIN,
        )

    def _poynting(self, collector: CheckCollector) -> None:
        limit = self.tolerance("interaction.poynting")
        lattice = GridSpec.full_cell(self.mode.profile, self.mode.omega)
        for kind in (ModeKind.TE, ModeKind.TM):
            mode = replace(self.mode, kind=kind)
            result = complex_poynting_balance(materialize(mode_sampler(mode), lattice))
            label = kind.value.lower()
            collector.check(self.NAME, f"poynting.{label}.imbalance", result.imbalance, limit)
            collector.check(
                self.NAME, f"poynting.{label}.equipartition", result.energy_imbalance, limit
            )

    def _current(self, collector: CheckCollector) -> None:
        te = replace(self.mode, kind=ModeKind.TE)
        mod = HelicalModulation.matched(te, 0.5 * te.omega, helicity=-1)
        grid = materialize(apply_helical(mode_sampler(te), mod), self.config.grid.spec())
        current = effective_advanced_current(grid)
        collector.check(
            self.NAME, "current.exact_advanced", current.rms_normalized(),
            self.tolerance("maxwell.residual"),
        )

    def _quadratic_form(self) -> float:
        """Cell and period average of D·E* + H·B* of the bare transverse fields."""
        lattice = GridSpec.full_cell(self.mode.profile, self.mode.omega, nz=1)
        grid = materialize(mode_sampler(self.mode), lattice)
        dt, _ = grid.displacement()
        electric = np.real(dt.x * np.conj(grid.Et.x) + dt.y * np.conj(grid.Et.y))
        magnetic = np.abs(grid.cBt.x) ** 2 + np.abs(grid.cBt.y) ** 2
        return float(np.mean(electric + magnetic))
