"""Helical-velocity sweep, matched residual floor and energy invariance."""

import numpy as np

from prahmlab.core.models import Comparison
from prahmlab.helical import (
    HelicalModulation,
    apply_helical,
    classical_energy_density,
    rotated_magnitudes_match,
    vh_sweep,
)
from prahmlab.maxwell.grid import GridSpec, materialize
from prahmlab.maxwell.residual import residual_te, residual_tm
from prahmlab.verification.base import CheckCollector, VerificationSuite
from prahmlab.waveguide.modes import ModeKind, ModeSpec, mode_sampler

SWEEP_RATIOS = np.linspace(0.8, 1.2, 41)
SWEEP_OMEGAS = (0.5, 1.5, 2.5)
ENERGY_OMEGAS = (0.5, 2.5)


def residual_minimum_ratio(mode: ModeSpec) -> float:
    """Ratio v_h/v_g at which the sampled curl residual is smallest.

    For a constant index this is 1. With n1 ≠ 0 the per-sideband displacement
    moves it to k/(ωn(n + 2n1ω))/v_g.
    """
    if not mode.refr.dispersive:
        return 1.0
    n, w = mode.index, mode.omega
    return mode.k / (w * n * (n + 2.0 * mode.refr.n1 * w)) / mode.group_velocity


class HelicalSuite(VerificationSuite):
    NAME = "helical"

    def run(self, collector: CheckCollector) -> None:
        mode = self.mode
        omega = mode.omega
        step = float(SWEEP_RATIOS[1] - SWEEP_RATIOS[0])
        expected = residual_minimum_ratio(mode)
        factor = self.tolerance("helical.sweep_factor")

        for scale in SWEEP_OMEGAS:
            points = vh_sweep(mode, scale * omega, SWEEP_RATIOS)
            residuals = np.array([p.residual for p in points])
            best = points[int(np.argmin(residuals))].ratio
            collector.check(
                self.NAME, f"sweep.{scale:g}w.minimum", abs(best - expected), step / 2,
                detail=f"minimum at ratio {best:.3f}",
            )
            floor = points[int(np.argmin(np.abs(SWEEP_RATIOS - expected)))].residual
            off = points[int(np.argmin(np.abs(SWEEP_RATIOS - 0.9)))].residual
            collector.check(
                self.NAME, f"sweep.{scale:g}w.contrast", off / max(floor, 1e-300), factor,
                Comparison.AT_LEAST,
            )

        limit = self.tolerance(
            "helical.dispersive_residual" if mode.refr.dispersive else "helical.residual"
        )
        lattice = self.config.grid.spec()
        residual = residual_te if mode.kind is ModeKind.TE else residual_tm
        matched = HelicalModulation.matched(mode, 0.5 * omega)
        report = residual(materialize(apply_helical(mode_sampler(mode), matched), lattice))
        for equation, value in report.l2.items():
            collector.check(self.NAME, f"matched.residual.{equation}", value, limit)

        exact = self.tolerance("helical.energy")
        cell = GridSpec.full_cell(mode.profile, omega, nx=16, ny=16, nt=32, nz=1)
        bare = classical_energy_density(materialize(mode_sampler(mode), cell))
        for scale in ENERGY_OMEGAS:
            mod = HelicalModulation.matched(mode, scale * omega)
            turned = classical_energy_density(
                materialize(apply_helical(mode_sampler(mode), mod), cell)
            )
            collector.check(
                self.NAME, f"energy.{scale:g}w", abs(turned - bare) / bare, exact
            )
            gap = rotated_magnitudes_match(mode_sampler(mode), mod, cell)
            collector.check(
                self.NAME, f"magnitude.{scale:g}w",
                gap / materialize(mode_sampler(mode), cell).max_field(), exact,
            )
