"""Tests for the check collector, the suite registry and small suite runs."""

import math

import pytest

from prahmlab.core.config import RunConfig
from prahmlab.core.exceptions import ConfigError, PrahmLabError
from prahmlab.core.models import Comparison
from prahmlab.verification import (
    SUITE_REGISTRY,
    CheckCollector,
    VerificationSuite,
    resolve_suites,
    run_suites,
)
from prahmlab.verification.helical import residual_minimum_ratio
from prahmlab.waveguide.modes import ModeSpec
from prahmlab.waveguide.profiles import ProfileKind


class BrokenSuite(VerificationSuite):
    NAME = "broken"

    def run(self, collector: CheckCollector) -> None:
        collector.check(self.NAME, "before", 0.0, 1.0)
        raise PrahmLabError("lattice exploded")


@pytest.mark.parametrize(
    ("measured", "tolerance", "comparison", "passed"),
    [
        (1e-4, 1e-3, Comparison.AT_MOST, True),
        (1e-3, 1e-3, Comparison.AT_MOST, True),
        (2e-3, 1e-3, Comparison.AT_MOST, False),
        (60.0, 50.0, Comparison.AT_LEAST, True),
        (2.1, (1.7, 2.3), Comparison.WITHIN, True),
        (2.4, (1.7, 2.3), Comparison.WITHIN, False),
        (math.nan, 1.0, Comparison.AT_MOST, False),
        (math.inf, 1.0, Comparison.AT_LEAST, False),
    ],
)
def test_check_outcomes(measured, tolerance, comparison, passed):
    collector = CheckCollector()
    result = collector.check("demo", "value", measured, tolerance, comparison)
    assert result.passed is passed
    assert collector.get_results().checks == [result]


def test_tolerance_text():
    collector = CheckCollector()
    bounded = collector.check("demo", "order", 2.0, (1.7, 2.3), Comparison.WITHIN)
    upper = collector.check("demo", "residual", 1e-4, 1e-3)
    assert bounded.tolerance_text() == "in [1.7, 2.3]"
    assert upper.tolerance_text() == "<= 0.001"


def test_suite_errors_are_recorded(config):
    collector = CheckCollector()
    BrokenSuite(config, config.validate()).execute(collector)
    report = collector.get_results()
    assert report.suites == ["broken"]
    assert report.errors == [("broken", "lattice exploded")]
    assert len(report.checks) == 1
    assert not report.all_passed
    assert report.stats["errors"] == 1


def test_resolve_suites():
    assert resolve_suites("all") == list(SUITE_REGISTRY)
    assert resolve_suites("ladder") == ["ladder"]
    with pytest.raises(ConfigError):
        resolve_suites("quantum")


def test_registry_order():
    assert list(SUITE_REGISTRY) == ["maxwell", "helical", "packet", "interaction", "ladder", "txline"]


@pytest.mark.parametrize("name", ["ladder", "txline"])
def test_small_suites_pass(config, name):
    finished = []
    report = run_suites(config, [name], on_suite=finished.append)
    assert finished == [name]
    assert report.suites == [name]
    assert report.checks
    assert report.all_passed, [c.name for c in report.failed]


def test_ideal_source_suite(config):
    config.txline.source = "ideal"
    report = run_suites(config, ["txline"])
    names = {check.name for check in report.checks}
    assert "power_returned" in names
    assert "power_ceased" not in names
    assert report.all_passed


def test_invalid_config_runs_nothing(config):
    config.packet.Q = 0
    with pytest.raises(ConfigError):
        run_suites(config, ["ladder"])


def test_bessel_cell_records_suite_error():
    config = RunConfig()
    config.mode.profile = ProfileKind.BESSEL_CIRCULAR
    report = run_suites(config, ["interaction"])
    assert report.errors
    assert report.errors[0][0] == "interaction"
    assert "periodic" in report.errors[0][1]


def test_residual_minimum_ratio():
    assert residual_minimum_ratio(ModeSpec.canonical()) == 1.0
    shifted = residual_minimum_ratio(ModeSpec.canonical(n1=0.02))
    assert shifted != 1.0
    assert 0.8 < shifted < 1.2
