"""Trapped energy, power cessation and the Planck factor of the shorted line."""

import math

from prahmlab.txline import (
    SourceModel,
    TxLineSpec,
    closed_form_energy,
    planck_xi,
    planck_xi_closed_form,
    simulate,
)
from prahmlab.verification.base import CheckCollector, VerificationSuite

#: Value quoted for the Planck factor, used as a loose sanity band only.
QUOTED_XI = 0.6
XI_OMEGAS = (2.0 * math.pi, 2.0 * math.pi * 1e9, 2.0 * math.pi * 1e15)


class TxLineSuite(VerificationSuite):
    NAME = "txline"

    def run(self, collector: CheckCollector) -> None:
        t = self.config.txline
        spec = TxLineSpec(
            Z0=t.Z0, omega=t.omega, current=t.current,
            steps_per_transit=t.steps_per_transit, source=SourceModel(t.source),
        )
        energy_limit = self.tolerance("txline.energy")
        ceased_limit = self.tolerance("txline.ceased")

        target = closed_form_energy(spec)
        trace = simulate(spec, 3.0 * spec.round_trip)
        average = 0.5 * spec.current**2 * spec.Z0

        collector.check(
            self.NAME, "trapped_energy", abs(trace.stored[-1] - target) / target, energy_limit,
            detail=f"{trace.stored[-1]:.6g} J against {target:.6g} J",
        )
        collector.check(
            self.NAME, "charging_power",
            abs(trace.average_power(0.0, spec.round_trip) - average) / average, energy_limit,
        )
        if spec.source is SourceModel.MATCHED:
            late = trace.average_power(spec.round_trip, trace.t[-1] + spec.dt)
            collector.check(self.NAME, "power_ceased", abs(late) / average, ceased_limit)
        else:
            returned = trace.average_power(spec.round_trip, 2.0 * spec.round_trip)
            collector.check(
                self.NAME, "power_returned", abs(returned + average) / average, energy_limit
            )
        collector.check(
            self.NAME, "bookkeeping", trace.bookkeeping_error() / target, ceased_limit
        )

        xi = planck_xi(1.0)
        collector.check(
            self.NAME, "planck_xi", abs(xi - planck_xi_closed_form()), self.tolerance("txline.xi"),
            detail=f"xi = {xi:.6f}",
        )
        collector.check(
            self.NAME, "planck_xi.quoted", abs(xi - QUOTED_XI) / QUOTED_XI, 0.1,
        )
        values = [planck_xi(1.0, omega=w) for w in XI_OMEGAS]
        collector.check(
            self.NAME, "planck_xi.frequency_independence",
            (max(values) - min(values)) / min(values), 1e-9,
        )
