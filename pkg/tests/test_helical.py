"""Tests for helical modulation of modal fields."""

import math

import numpy as np
import pytest

from prahmlab.core.exceptions import IncompletePeriod, ModeError
from prahmlab.helical import (
    CURL_EQUATION,
    HelicalModulation,
    apply_helical,
    classical_energy_density,
    leftover_term,
    rotated_magnitudes_match,
    vh_sweep,
)
from prahmlab.maxwell import GridSpec, materialize, residual_te, residual_tm
from prahmlab.waveguide.modes import ModeKind, ModeSpec, mode_sampler

RATIOS = np.round(np.linspace(0.8, 1.2, 21), 12)


@pytest.mark.parametrize(
    "kwargs",
    [
        {"Omega": -1.0, "v_h": 0.5},
        {"Omega": 1.0, "v_h": 0.0},
        {"Omega": 1.0, "v_h": 0.5, "helicity": 0},
    ],
)
def test_invalid_modulation(kwargs):
    with pytest.raises(ModeError):
        HelicalModulation(**kwargs)


def test_matched_uses_group_velocity(te_mode):
    mod = HelicalModulation.matched(te_mode, math.pi, helicity=-1)
    assert mod.v_h == te_mode.group_velocity
    assert mod.angle(0.25, 0.0) == pytest.approx(-math.pi / 4)
    assert leftover_term(te_mode, mod) == 0.0


def test_modulation_rotates_only_transverse_fields(mode):
    spec = GridSpec.canonical()
    x, y, z, t = spec.mesh()
    mod = HelicalModulation.matched(mode, 0.5 * mode.omega)
    bare = mode_sampler(mode)(x, y, z, t)
    turned = apply_helical(mode_sampler(mode), mod)(x, y, z, t)
    np.testing.assert_array_equal(turned.Ez, bare.Ez)
    np.testing.assert_array_equal(turned.cBz, bare.cBz)
    assert rotated_magnitudes_match(mode_sampler(mode), mod, spec) <= 1e-12


def test_zero_frequency_is_identity(te_mode):
    spec = GridSpec.canonical()
    x, y, z, t = spec.mesh()
    mod = HelicalModulation(Omega=0.0, v_h=1.0)
    bare = mode_sampler(te_mode)(x, y, z, t)
    turned = apply_helical(mode_sampler(te_mode), mod)(x, y, z, t)
    np.testing.assert_allclose(turned.Et.x, bare.Et.x, atol=1e-15)
    np.testing.assert_allclose(turned.cBt.y, bare.cBt.y, atol=1e-15)


def test_matched_modulation_solves_maxwell(mode, canonical_grid):
    mod = HelicalModulation.matched(mode, 0.5 * mode.omega)
    grid = materialize(apply_helical(mode_sampler(mode), mod), canonical_grid)
    report = residual_te(grid) if mode.kind is ModeKind.TE else residual_tm(grid)
    assert report.max_l2 <= 1e-3


@pytest.mark.parametrize("scale", [0.5, 1.5, 2.5])
def test_sweep_minimum_at_group_velocity(mode, scale):
    points = vh_sweep(mode, scale * mode.omega, RATIOS)
    residuals = np.array([p.residual for p in points])
    best = points[int(np.argmin(residuals))]
    assert best.ratio == pytest.approx(1.0)
    off = points[int(np.argmin(np.abs(RATIOS - 0.9)))]
    assert off.residual >= 50.0 * best.residual
    assert best.leftover == pytest.approx(0.0, abs=1e-12)


def test_sweep_reports_curl_equation(tm_mode):
    mod = HelicalModulation(Omega=math.pi, v_h=0.9 * tm_mode.group_velocity)
    grid = materialize(apply_helical(mode_sampler(tm_mode), mod), GridSpec.sweep())
    [point] = vh_sweep(tm_mode, math.pi, [0.9])
    assert point.residual == residual_tm(grid).l2[CURL_EQUATION[ModeKind.TM]]


@pytest.mark.parametrize(("Omega", "ratios"), [(0.0, [1.0]), (1.0, [1.0, -0.5])])
def test_sweep_rejects_invalid_input(te_mode, Omega, ratios):
    with pytest.raises(ModeError):
        vh_sweep(te_mode, Omega, ratios)


def test_dispersive_sweep_minimum_moves():
    mode = ModeSpec.canonical(n1=0.02)
    n, w = mode.index, mode.omega
    expected = mode.k / (w * n * (n + 2.0 * mode.refr.n1 * w)) / mode.group_velocity
    ratios = np.round(np.linspace(0.8, 1.2, 41), 12)
    points = vh_sweep(mode, 0.5 * w, ratios)
    best = points[int(np.argmin([p.residual for p in points]))].ratio
    assert abs(best - expected) <= 0.01


@pytest.mark.parametrize("scale", [0.5, 2.5])
def test_energy_density_unchanged_by_rotation(mode, scale):
    cell = GridSpec.full_cell(mode.profile, mode.omega, nx=16, ny=16, nt=32, nz=1)
    bare = classical_energy_density(materialize(mode_sampler(mode), cell))
    mod = HelicalModulation.matched(mode, scale * mode.omega)
    turned = classical_energy_density(materialize(apply_helical(mode_sampler(mode), mod), cell))
    assert bare > 0.0
    assert turned == pytest.approx(bare, rel=1e-12)


def test_energy_density_needs_whole_periods(te_mode, canonical_grid):
    with pytest.raises(IncompletePeriod):
        classical_energy_density(materialize(mode_sampler(te_mode), canonical_grid))
