"""Abstract base class for verification suites and the check collector."""

import logging
import math
from abc import ABC, abstractmethod
from typing import ClassVar

from prahmlab.core.config import RunConfig
from prahmlab.core.exceptions import PrahmLabError
from prahmlab.core.models import CheckResult, Comparison, VerificationReport
from prahmlab.waveguide.modes import ModeSpec

logger = logging.getLogger(__name__)


def _passes(measured: float, tolerance: float | tuple[float, float], comparison: Comparison) -> bool:
    if not math.isfinite(measured):
        return False
    if comparison is Comparison.WITHIN:
        assert isinstance(tolerance, tuple)
        low, high = tolerance
        return low <= measured <= high
    assert not isinstance(tolerance, tuple)
    if comparison is Comparison.AT_LEAST:
        return measured >= tolerance
    return measured <= tolerance


class CheckCollector:
    """Collect check results and suite errors into one report."""

    def __init__(self) -> None:
        self.report = VerificationReport()

    def start_suite(self, suite: str) -> None:
        if suite not in self.report.suites:
            self.report.suites.append(suite)

    def check(
        self,
        suite: str,
        name: str,
        measured: float,
        tolerance: float | tuple[float, float],
        comparison: Comparison = Comparison.AT_MOST,
        detail: str | None = None,
    ) -> CheckResult:
        """Compare a measured value with its tolerance and record the outcome.

        Args:
            suite: Suite the check belongs to.
            name: Check name, unique within the suite.
            measured: Measured value.
            tolerance: Bound, or (low, high) for Comparison.WITHIN.
            comparison: How measured relates to tolerance when passing.
            detail: Optional free-text context.

        Returns:
            The recorded CheckResult.
        """
        result = CheckResult(
            name=name,
            suite=suite,
            measured=float(measured),
            tolerance=tolerance,
            comparison=comparison,
            passed=_passes(float(measured), tolerance, comparison),
            detail=detail,
        )
        self.report.checks.append(result)
        logger.debug("%s/%s measured=%.6g passed=%s", suite, name, result.measured, result.passed)
        return result

    def record_error(self, suite: str, error: Exception) -> None:
        self.report.errors.append((suite, str(error)))

    def get_results(self) -> VerificationReport:
        return self.report


class VerificationSuite(ABC):
    """One group of invariants checked against a run configuration."""

    # Class attribute: registry key and report label
    NAME: ClassVar[str] = ""

    def __init__(self, config: RunConfig, mode: ModeSpec) -> None:
        """Initialize the suite.

        Args:
            config: Validated run configuration.
            mode: Mode built from the configuration.
        """
        self.config = config
        self.mode = mode

    @abstractmethod
    def run(self, collector: CheckCollector) -> None:
        """Run every check of the suite, recording results in `collector`."""
        ...

    def tolerance(self, key: str) -> float:
        return self.config.tolerance(key)

    def execute(self, collector: CheckCollector) -> None:
        """Run the suite, turning library errors into recorded suite errors."""
        collector.start_suite(self.NAME)
        logger.info("suite %s started", self.NAME)
        try:
            self.run(collector)
        except PrahmLabError as e:
            logger.warning("suite %s aborted: %s", self.NAME, e)
            collector.record_error(self.NAME, e)
        logger.info("suite %s finished", self.NAME)
