"""Ladder arithmetic, differential realisation, commutator and energy eigenvalue."""

import math

import numpy as np

from prahmlab.ladder import (
    LadderState,
    commutator_check,
    demote,
    energy_eigenvalue,
    number_check,
    promote,
)
from prahmlab.verification.base import CheckCollector, VerificationSuite

LADDER_M = range(21)
SAMPLE_TAUS = np.linspace(-0.5, 0.5, 17)


class LadderSuite(VerificationSuite):
    NAME = "ladder"

    def run(self, collector: CheckCollector) -> None:
        exact = self.tolerance("ladder.exact")
        omega = self.mode.omega
        coefficient = commutator = eigen = differential = 0.0
        for M in LADDER_M:
            state = LadderState(M=M, omega=omega)
            raised = promote(state)
            coefficient = max(coefficient, abs(raised.coeff - math.sqrt(M + 1)))
            if M > 0:
                coefficient = max(coefficient, abs(demote(state).coeff - math.sqrt(M)))
            commutator = max(commutator, commutator_check(state))
            eigen = max(eigen, abs(energy_eigenvalue(state) - (M + 0.5)))
            differential = max(differential, number_check(state, SAMPLE_TAUS))

        collector.check(self.NAME, "coefficients", coefficient, exact)
        collector.check(self.NAME, "commutator", commutator, exact)
        collector.check(self.NAME, "energy_eigenvalue", eigen, exact)
        collector.check(self.NAME, "annihilation", demote(LadderState(M=0)).coeff, exact)
        collector.check(
            self.NAME, "number_differential", differential, self.tolerance("ladder.number")
        )
