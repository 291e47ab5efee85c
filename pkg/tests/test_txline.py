"""Tests for the shorted transmission-line bounce model."""

import math

import pytest
from scipy import constants

from prahmlab.core.exceptions import DurationTooShort, TxLineError
from prahmlab.txline import (
    FREE_SPACE_IMPEDANCE,
    SourceModel,
    TxLineSpec,
    closed_form_energy,
    planck_xi,
    planck_xi_closed_form,
    simulate,
    trapped_energy,
)


def test_line_geometry():
    spec = TxLineSpec()
    assert spec.tau0 == pytest.approx(1.0)
    assert spec.round_trip == pytest.approx(2.0)
    assert spec.dt == pytest.approx(1.0 / 512)
    assert spec.length == pytest.approx(constants.c)
    assert spec.source is SourceModel.MATCHED


@pytest.mark.parametrize(
    "kwargs",
    [{"Z0": 0.0}, {"omega": -1.0}, {"steps_per_transit": 1}],
)
def test_invalid_line(kwargs):
    with pytest.raises(TxLineError):
        TxLineSpec(**kwargs)


def test_unknown_source_model():
    with pytest.raises(ValueError):
        TxLineSpec(source="lossy")


def test_trapped_energy_matches_closed_form():
    spec = TxLineSpec()
    assert closed_form_energy(spec) == pytest.approx(377.0)
    assert trapped_energy(spec) == pytest.approx(closed_form_energy(spec), rel=5e-3)


@pytest.mark.parametrize("source", list(SourceModel))
def test_energy_bookkeeping(source):
    trace = simulate(TxLineSpec(source=source), 8.0)
    assert trace.bookkeeping_error() <= 1e-9 * closed_form_energy(TxLineSpec())


def test_matched_source_ceases_after_round_trip():
    spec = TxLineSpec()
    trace = simulate(spec, 4 * spec.round_trip)
    assert trace.average_power(0.0, spec.round_trip) == pytest.approx(0.5 * spec.Z0, rel=1e-9)
    assert abs(trace.average_power(spec.round_trip, 4 * spec.round_trip)) <= 1e-6
    assert trace.stored[-1] == pytest.approx(trace.stored[2 * 2 * spec.steps_per_transit - 1])


def test_ideal_source_takes_energy_back():
    spec = TxLineSpec(source=SourceModel.IDEAL)
    trace = simulate(spec, 3 * spec.round_trip)
    half = 0.5 * spec.Z0 * spec.current**2
    assert trace.average_power(0.0, spec.round_trip) == pytest.approx(half, rel=1e-9)
    assert trace.average_power(spec.round_trip, 2 * spec.round_trip) == pytest.approx(-half, rel=1e-9)
    assert trace.average_power(2 * spec.round_trip, 3 * spec.round_trip) == pytest.approx(half, rel=1e-9)


def test_step_refinement_keeps_energy():
    coarse = trapped_energy(TxLineSpec(steps_per_transit=256))
    fine = trapped_energy(TxLineSpec(steps_per_transit=512))
    assert abs(coarse - fine) <= 1e-9 * fine


def test_duration_must_cover_round_trip():
    with pytest.raises(DurationTooShort) as excinfo:
        simulate(TxLineSpec(), 1.5)
    assert excinfo.value.required == pytest.approx(2.0)


@pytest.mark.parametrize("omega", [2 * math.pi, 1e9])
def test_planck_ratio_is_frequency_independent(omega):
    assert planck_xi(1.0, omega=omega) == pytest.approx(planck_xi_closed_form(), rel=0.01)


def test_planck_ratio_closed_form():
    assert planck_xi_closed_form() == pytest.approx(0.5766, abs=5e-4)
    assert planck_xi_closed_form(2 * FREE_SPACE_IMPEDANCE) == pytest.approx(2 * planck_xi_closed_form())
    assert planck_xi(3.0) == pytest.approx(planck_xi(1.0), rel=1e-9)


def test_planck_ratio_needs_positive_zeta():
    with pytest.raises(TxLineError):
        planck_xi(0.0)
