"""Maxwell residual, convergence, light-cone and time-reversal checks."""

from dataclasses import replace

import numpy as np

from prahmlab.core.models import Comparison, ResidualReport
from prahmlab.maxwell.grid import FieldGrid, materialize
from prahmlab.maxwell.lightcone import lightcone_decompose, lightcone_scalar, residual_lightcone
from prahmlab.maxwell.residual import convergence_order, residual_te, residual_tm
from prahmlab.maxwell.symmetry import sigma_time_reverse
from prahmlab.verification.base import CheckCollector, VerificationSuite
from prahmlab.waveguide.modes import ModeKind, ModeSpec, mode_sampler


def _residual(grid: FieldGrid, kind: ModeKind) -> ResidualReport:
    return residual_te(grid) if kind is ModeKind.TE else residual_tm(grid)


def _field_gap(a: FieldGrid, b: FieldGrid) -> float:
    gaps = [
        np.max(np.asarray((a.Et - b.Et).norm())),
        np.max(np.asarray((a.cBt - b.cBt).norm())),
        np.max(np.abs(a.Ez - b.Ez)),
        np.max(np.abs(a.cBz - b.cBz)),
    ]
    return float(max(gaps))


class MaxwellSuite(VerificationSuite):
    """TE and TM canonical residuals, order under halving, light-cone form, σ/time reversal."""

    NAME = "maxwell"

    def run(self, collector: CheckCollector) -> None:
        lattice = self.config.grid.spec()
        limit = self.tolerance("maxwell.residual")
        order_band = self.tolerance("maxwell.order")
        exact = self.tolerance("maxwell.symmetry")

        for kind in (ModeKind.TE, ModeKind.TM):
            mode: ModeSpec = replace(self.mode, kind=kind)
            label = kind.value.lower()
            grid = materialize(mode_sampler(mode), lattice)
            report = _residual(grid, kind)
            for equation, value in report.l2.items():
                collector.check(self.NAME, f"{label}.residual.{equation}", value, limit)

            fine = _residual(materialize(mode_sampler(mode), lattice.refined()), kind)
            for equation, order in convergence_order(report, fine).items():
                collector.check(
                    self.NAME,
                    f"{label}.order.{equation}",
                    order,
                    (2.0 - order_band, 2.0 + order_band),
                    Comparison.WITHIN,
                )

            lc = lightcone_decompose(grid)
            collector.check(
                self.NAME, f"{label}.lightcone.reconstruction",
                lc.reconstruction_error(grid) / grid.max_field(), exact,
            )
            lightcone = residual_lightcone(lc, lightcone_scalar(grid, kind), grid, kind)
            collector.check(
                self.NAME, f"{label}.lightcone.residual", lightcone.max_l2, 2.0 * limit,
                detail="light-cone form is bounded by twice the component form",
            )

            reversed_grid = sigma_time_reverse(grid)
            reversed_report = _residual(reversed_grid, kind)
            drift = max(abs(reversed_report.l2[k] - report.l2[k]) for k in report.l2)
            collector.check(self.NAME, f"{label}.time_reverse.residual", drift, exact)
            collector.check(
                self.NAME, f"{label}.time_reverse.involution",
                _field_gap(sigma_time_reverse(reversed_grid), grid), exact,
            )
