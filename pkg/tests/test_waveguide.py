"""Tests for Bessel evaluation, transverse profiles and the modal fields."""

import math

import numpy as np
import pytest
from scipy import special

from prahmlab.algebra import inner, sigma_apply
from prahmlab.core.exceptions import BelowCutoff, GridError, KappaZero, ModeError
from prahmlab.maxwell.grid import GridSpec
from prahmlab.waveguide import (
    PROFILE_REGISTRY,
    BesselCircular,
    CombinedSampler,
    ModeKind,
    ModeSampler,
    ModeSpec,
    ProfileKind,
    RefractiveModel,
    SeparableCosine,
    axial_wavenumber,
    bessel_j,
    bessel_jn,
    build_mode,
    build_profile,
    group_velocity,
    mode_sampler,
    phase_velocity,
    profile_helmholtz_residual,
    signed_wavenumber,
    te_mode_sampler,
)


def test_bessel_matches_reference():
    u = np.linspace(-30.0, 30.0, 121)
    table = bessel_jn(6, u)
    for order in range(7):
        np.testing.assert_allclose(table[order], special.jv(order, u), atol=1e-12)


def test_bessel_at_origin():
    table = bessel_jn(3, np.array([0.0]))
    np.testing.assert_array_equal(table[:, 0], [1.0, 0.0, 0.0, 0.0])


def test_bessel_negative_order():
    u = np.linspace(0.1, 10.0, 25)
    np.testing.assert_allclose(bessel_j(-1, u), -special.jv(1, u), atol=1e-12)
    np.testing.assert_allclose(bessel_j(-2, u), special.jv(2, u), atol=1e-12)


def test_bessel_rejects_negative_order_max():
    with pytest.raises(ValueError):
        bessel_jn(-1, 1.0)


def test_canonical_wavenumber(te_mode):
    # n = 1.5, κ = 0.6·nω, so k = 0.8·nω
    assert te_mode.k == pytest.approx(0.8 * 1.5 * 2 * math.pi, rel=1e-14)
    assert te_mode.kappa == pytest.approx(0.6 * 1.5 * 2 * math.pi, rel=1e-14)


def test_constant_index_velocities(te_mode):
    n = te_mode.index
    assert te_mode.group_velocity * te_mode.phase_velocity == pytest.approx(1.0 / n**2, rel=1e-14)
    assert te_mode.group_velocity < 1.0 / n


def test_dispersive_group_velocity():
    refr = RefractiveModel(n0=1.5, n1=0.01, omega_ref=2 * math.pi)
    omega, kappa = 2 * math.pi, 5.0
    n = refr.index(omega)
    k = axial_wavenumber(omega, refr, kappa)
    expected = k / (n * omega * (n + refr.n1 * omega))
    assert group_velocity(omega, refr, kappa) == pytest.approx(expected, rel=1e-8)


def test_phase_velocity_definition():
    refr = RefractiveModel()
    assert phase_velocity(3.0, refr, 2.0) == pytest.approx(3.0 / math.sqrt(1.5**2 * 9 - 4))


def test_negative_frequency_wavenumber():
    refr = RefractiveModel()
    assert signed_wavenumber(-3.0, refr, 2.0) == pytest.approx(-axial_wavenumber(3.0, refr, 2.0))


@pytest.mark.parametrize("ratio", [1.0, 1.01, 2.0])
def test_below_cutoff(ratio):
    refr = RefractiveModel()
    omega = 2 * math.pi
    with pytest.raises(BelowCutoff) as excinfo:
        axial_wavenumber(omega, refr, ratio * 1.5 * omega)
    assert "below cutoff" in str(excinfo.value)


def test_nonpositive_index_rejected():
    with pytest.raises(ModeError):
        RefractiveModel(n0=1.0, n1=1.0, omega_ref=10.0).index(1.0)


@pytest.mark.parametrize("kind", list(ProfileKind))
def test_profile_solves_helmholtz_to_second_order(kind):
    profile = build_profile(kind, kappa=5.0)
    coarse = profile_helmholtz_residual(profile, 0.01)
    fine = profile_helmholtz_residual(profile, 0.005)
    assert coarse < 1e-3
    assert math.log2(coarse / fine) == pytest.approx(2.0, abs=0.1)


@pytest.mark.parametrize("kind", list(ProfileKind))
def test_profile_gradient_matches_difference(kind):
    profile = build_profile(kind, kappa=5.0)
    x, y = profile.reference_point()
    h = 1e-6
    gx, gy = profile.gradient(x, y)
    assert gx == pytest.approx((profile.value(x + h, y) - profile.value(x - h, y)) / (2 * h), abs=1e-7)
    assert gy == pytest.approx((profile.value(x, y + h) - profile.value(x, y - h)) / (2 * h), abs=1e-7)
    assert abs(gx) > 1e-3 and abs(gy) > 1e-3


def test_profile_registry():
    assert PROFILE_REGISTRY[ProfileKind.SEPARABLE_COSINE] is SeparableCosine
    assert PROFILE_REGISTRY[ProfileKind.BESSEL_CIRCULAR] is BesselCircular
    assert build_profile("separable-cosine", 3.0, aspect=2.0).kappa == pytest.approx(3.0)


def test_zero_kappa_rejected():
    with pytest.raises(KappaZero):
        build_profile(ProfileKind.SEPARABLE_COSINE, 0.0)


def test_bessel_profile_has_no_periodic_cell():
    profile = build_profile(ProfileKind.BESSEL_CIRCULAR, 5.0)
    assert not profile.cell().periodic
    with pytest.raises(GridError):
        GridSpec.full_cell(profile, 2 * math.pi)


def test_te_and_tm_axial_components(te_mode, tm_mode):
    x, y = te_mode.profile.reference_point()
    te = mode_sampler(te_mode)(x, y, 0.1, 0.2)
    tm = mode_sampler(tm_mode)(x, y, 0.1, 0.2)
    assert np.all(te.Ez == 0)
    assert np.all(tm.cBz == 0)
    assert abs(te.cBz) > 0 and abs(tm.Ez) > 0


def test_transverse_fields_are_orthogonal(mode):
    x = np.linspace(0.0, 1.0, 7)[:, None]
    y = np.linspace(0.0, 1.0, 7)[None, :]
    sample = mode_sampler(mode)(x, y, 0.0, 0.0)
    np.testing.assert_allclose(inner(sample.Et, sample.cBt), 0.0, atol=1e-12)


def cross_section_points() -> tuple[np.ndarray, np.ndarray]:
    x = np.linspace(-0.4, 0.9, 9)[:, None]
    y = np.linspace(-0.2, 1.1, 9)[None, :]
    return x, y


def test_te_transverse_fields_are_proportional(te_mode):
    x, y = cross_section_points()
    sample = mode_sampler(te_mode)(x, y, 0.3, 0.7)
    ratio = te_mode.omega / te_mode.k
    turned = sigma_apply(sample.Et)
    np.testing.assert_allclose(turned.x, ratio * sample.cBt.x, rtol=0, atol=1e-12)
    np.testing.assert_allclose(turned.y, ratio * sample.cBt.y, rtol=0, atol=1e-12)


def test_tm_is_dual_to_te(te_mode, tm_mode):
    assert tm_mode.k == te_mode.k
    x, y = cross_section_points()
    te = mode_sampler(te_mode)(x, y, -0.2, 0.45)
    tm = mode_sampler(tm_mode)(x, y, -0.2, 0.45)
    n2 = te_mode.index**2
    np.testing.assert_allclose(tm.Ez, te.cBz, rtol=0, atol=1e-12)
    np.testing.assert_allclose(tm.Et.x, te.cBt.x, rtol=0, atol=1e-12)
    np.testing.assert_allclose(tm.Et.y, te.cBt.y, rtol=0, atol=1e-12)
    np.testing.assert_allclose(tm.cBt.x, -n2 * te.Et.x, rtol=0, atol=1e-12)
    np.testing.assert_allclose(tm.cBt.y, -n2 * te.Et.y, rtol=0, atol=1e-12)


def test_te_sampler_rejects_tm(tm_mode):
    with pytest.raises(ModeError):
        te_mode_sampler(tm_mode)


def test_build_mode_derives_k(te_mode):
    built = build_mode(ModeKind.TE, te_mode.omega, te_mode.refr, te_mode.profile)
    assert built == te_mode


def test_combined_sampler_superposes(te_mode, tm_mode):
    combined = CombinedSampler.from_mode(te_mode, weight=0.5j)
    x, y = te_mode.profile.reference_point()
    total = combined(x, y, 0.0, 0.0)
    te = mode_sampler(te_mode)(x, y, 0.0, 0.0)
    tm = mode_sampler(tm_mode)(x, y, 0.0, 0.0)
    assert total.Et.x == pytest.approx(te.Et.x + 0.5j * tm.Et.x)
    assert total.cBz == pytest.approx(te.cBz)
    assert combined.mode == te_mode


def test_combined_sampler_needs_both_families(te_mode):
    with pytest.raises(ModeError):
        CombinedSampler(ModeSampler(te_mode), ModeSampler(te_mode))


def test_canonical_builder_accepts_strings():
    mode = ModeSpec.canonical(kind="TM", profile_kind="bessel-circular")
    assert mode.kind is ModeKind.TM
    assert isinstance(mode.profile, BesselCircular)
