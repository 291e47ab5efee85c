"""Tests for sampled grids, finite-difference residuals, light-cone form and symmetry."""

import math
from dataclasses import replace

import numpy as np
import pytest

from prahmlab.algebra import TransverseVec
from prahmlab.core.exceptions import (
    AsymmetricWindow,
    DegenerateResidual,
    GridError,
    GridMismatch,
    GridTooSmall,
    SpacingMismatch,
)
from prahmlab.maxwell import (
    TE_EQUATIONS,
    TM_EQUATIONS,
    GridSpec,
    Sources,
    convergence_order,
    lightcone_decompose,
    lightcone_scalar,
    materialize,
    residual_lightcone,
    residual_te,
    residual_tm,
    sigma_time_reverse,
    spectral_derivative,
    zero_grid,
)
from prahmlab.interaction import random_smooth_grid
from prahmlab.waveguide.modes import ModeKind, ModeSpec, mode_sampler


def residual(grid, kind):
    return residual_te(grid) if kind is ModeKind.TE else residual_tm(grid)


def test_canonical_lattice():
    spec = GridSpec.canonical()
    assert spec.shape == (3, 64, 32, 32)
    assert spec.t()[0] == pytest.approx(-spec.t()[-1])
    assert spec.z()[spec.center] == 0.0


def test_refined_keeps_window():
    spec = GridSpec.canonical()
    fine = spec.refined()
    assert fine.hx == spec.hx / 2 and fine.ht == spec.ht / 2
    assert fine.x()[-1] == pytest.approx(spec.x()[-1])
    assert fine.t()[-1] == pytest.approx(spec.t()[-1])


def test_full_cell_spans_one_period(te_mode):
    spec = GridSpec.full_cell(te_mode.profile, te_mode.omega, nt=32)
    assert spec.nt * spec.ht == pytest.approx(1.0)
    assert spec.periodic_xy
    ghost = GridSpec.full_cell(te_mode.profile, te_mode.omega, nt=32, ghost_t=True)
    assert ghost.nt == 34
    assert ghost.t()[ghost.window][0] == pytest.approx(0.0, abs=1e-15)


def test_invalid_lattice_rejected():
    with pytest.raises(GridError):
        GridSpec(nx=4, ny=4, nt=4, hx=0.0, hy=0.1, ht=0.1, hz=0.1)


def test_canonical_residuals(mode, canonical_grid):
    report = residual(materialize(mode_sampler(mode), canonical_grid), mode.kind)
    expected = TE_EQUATIONS if mode.kind is ModeKind.TE else TM_EQUATIONS
    assert tuple(report.l2) == expected
    for equation, value in report.l2.items():
        assert value <= 1e-3, equation
    assert report.max_linf >= report.max_l2


def test_second_order_convergence(mode, canonical_grid):
    sampler = mode_sampler(mode)
    coarse = residual(materialize(sampler, canonical_grid), mode.kind)
    fine = residual(materialize(sampler, canonical_grid.refined()), mode.kind)
    for equation, order in convergence_order(coarse, fine).items():
        assert order == pytest.approx(2.0, abs=0.3), equation


def test_zero_grid_has_zero_residual(canonical_grid):
    report = residual_te(zero_grid(canonical_grid))
    assert report.scale == 1.0
    assert report.max_l2 == 0.0
    with pytest.raises(DegenerateResidual):
        convergence_order(report, residual_te(zero_grid(canonical_grid.refined())))


def test_order_needs_halved_spacing(te_mode, canonical_grid):
    report = residual_te(materialize(mode_sampler(te_mode), canonical_grid))
    with pytest.raises(SpacingMismatch):
        convergence_order(report, report)


def test_small_grid_rejected(te_mode):
    spec = GridSpec(nx=2, ny=8, nt=8, hx=0.01, hy=0.01, ht=0.01, hz=0.01)
    with pytest.raises(GridTooSmall) as excinfo:
        residual_te(materialize(mode_sampler(te_mode), spec))
    assert excinfo.value.axis == "x"


def test_current_source_enters_ampere(te_mode, canonical_grid):
    grid = materialize(mode_sampler(te_mode), canonical_grid)
    zeros = np.zeros(canonical_grid.shape, dtype=np.complex128)
    quiet = residual_te(grid, Sources(Jt=TransverseVec(zeros, zeros)))
    assert quiet.l2 == residual_te(grid).l2
    loud = residual_te(grid, Sources(Jt=TransverseVec(zeros + 1.0, zeros)))
    assert loud.l2["ampere_t"] > 1e-2
    assert loud.l2["gauss_b"] == quiet.l2["gauss_b"]


def test_spectral_derivative_is_exact_on_periodic_samples():
    x = np.arange(16) / 16
    values = np.sin(2 * math.pi * x)[None, :]
    derivative = spectral_derivative(values, 1 / 16, axis=1)
    np.testing.assert_allclose(derivative.real, 2 * math.pi * np.cos(2 * math.pi * x)[None, :], atol=1e-12)


def test_lightcone_reconstruction(mode, canonical_grid):
    grid = materialize(mode_sampler(mode), canonical_grid)
    lc = lightcone_decompose(grid)
    assert lc.reconstruction_error(grid) <= 1e-12 * grid.max_field()


def test_lightcone_residual_bounded(mode, canonical_grid):
    grid = materialize(mode_sampler(mode), canonical_grid)
    lc = lightcone_decompose(grid)
    report = residual_lightcone(lc, lightcone_scalar(grid, mode.kind), grid, mode.kind)
    standard = residual(grid, mode.kind)
    assert set(report.l2) == {"plus", "minus", "mixed"}
    assert report.max_l2 <= 2.0 * 1e-3
    assert report.max_l2 <= 2.0 * standard.max_l2 * (1.0 + 1e-9)


def test_time_reversal_preserves_residuals(mode, canonical_grid):
    grid = materialize(mode_sampler(mode), canonical_grid)
    reversed_grid = sigma_time_reverse(grid)
    original = residual(grid, mode.kind)
    mirrored = residual(reversed_grid, mode.kind)
    for equation in original.l2:
        assert mirrored.l2[equation] == pytest.approx(original.l2[equation], abs=1e-12)


def test_time_reversal_is_involution(te_mode, canonical_grid):
    grid = materialize(mode_sampler(te_mode), canonical_grid)
    twice = sigma_time_reverse(sigma_time_reverse(grid))
    np.testing.assert_array_equal(twice.Et.x, grid.Et.x)
    np.testing.assert_array_equal(twice.cBz, grid.cBz)


def test_time_reversal_needs_symmetric_window(te_mode, canonical_grid):
    spec = replace(canonical_grid, t0=0.0)
    with pytest.raises(AsymmetricWindow):
        sigma_time_reverse(materialize(mode_sampler(te_mode), spec))


def test_grid_addition(te_mode, canonical_grid):
    grid = materialize(mode_sampler(te_mode), canonical_grid)
    doubled = grid + grid
    np.testing.assert_allclose(doubled.cBz, 2 * grid.cBz)
    np.testing.assert_allclose(grid.scaled(2.0).Et.x, doubled.Et.x)
    other = materialize(mode_sampler(te_mode), canonical_grid.refined())
    with pytest.raises(GridMismatch):
        grid + other


def test_doubled_electric_field_breaks_ampere(te_mode, canonical_grid):
    grid = materialize(mode_sampler(te_mode), canonical_grid)
    broken = residual_te(grid.with_fields(Et=grid.Et * 2.0))
    assert broken.l2["ampere_t"] >= 0.1
    intact = residual_te(grid)
    assert broken.l2["gauss_b"] * broken.scale == pytest.approx(
        intact.l2["gauss_b"] * intact.scale, rel=1e-12
    )


def test_flipped_magnetic_field_breaks_tm(tm_mode, canonical_grid):
    grid = materialize(mode_sampler(tm_mode), canonical_grid)
    broken = residual_tm(grid.with_fields(cBt=-grid.cBt))
    assert broken.l2["ampere_z"] >= 0.1
    assert broken.l2["faraday_t"] >= 0.1


@pytest.mark.parametrize("factor", [3.0, -0.25, 2.0 - 1.5j, 1e-6j])
def test_residual_is_linear(mode, canonical_grid, factor):
    grid = materialize(mode_sampler(mode), canonical_grid)
    original = residual(grid, mode.kind)
    scaled = residual(grid.scaled(factor), mode.kind)
    assert scaled.scale == pytest.approx(abs(factor) * original.scale, rel=1e-12)
    for equation, value in original.l2.items():
        assert scaled.l2[equation] == pytest.approx(value, rel=1e-7), equation
        raw = scaled.l2[equation] * scaled.scale
        assert raw == pytest.approx(abs(factor) * value * original.scale, rel=1e-7), equation


@pytest.mark.parametrize("modal_phase", [0.4, math.pi / 2, -2.5])
def test_modal_phase_leaves_residuals_unchanged(mode, canonical_grid, modal_phase):
    shifted_mode = ModeSpec.canonical(kind=mode.kind, modal_phase=modal_phase)
    original = residual(materialize(mode_sampler(mode), canonical_grid), mode.kind)
    shifted = residual(materialize(mode_sampler(shifted_mode), canonical_grid), mode.kind)
    for equation, value in original.l2.items():
        assert shifted.l2[equation] == pytest.approx(value, rel=1e-7), equation


@pytest.mark.parametrize("kind", [ModeKind.TE, ModeKind.TM], ids=["te", "tm"])
def test_time_reversal_preserves_residuals_of_arbitrary_fields(canonical_grid, rng, kind):
    grid = random_smooth_grid(canonical_grid, rng)
    original = residual(grid, kind)
    mirrored = residual(sigma_time_reverse(grid), kind)
    assert original.max_l2 > 1e-2
    for equation, value in original.l2.items():
        assert mirrored.l2[equation] == pytest.approx(value, rel=1e-12), equation
        assert mirrored.linf[equation] == pytest.approx(original.linf[equation], rel=1e-12), equation
