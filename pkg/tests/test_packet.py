"""Tests for resonant packet parameters, synthesis, energy, widths and velocity."""

import math
from dataclasses import replace

import numpy as np
import pytest

from prahmlab.core.exceptions import (
    DegenerateCancellation,
    NeedTwoProbes,
    NotGroundState,
    PacketError,
    PhiOutOfRange,
)
from prahmlab.packet import (
    VELOCITY_KAPPA_RATIO,
    AdvancedMap,
    PacketSampler,
    PacketSpec,
    beat_velocity_closed_form,
    energy_additivity_check,
    envelope,
    envelope_velocity_measure,
    ground_demotion_dispersal,
    packet_params,
    spectrum_uncertainty,
    synth_packet,
    velocity_mode,
)
from prahmlab.packet.synth import polarization_deviation, sigma_ratio_deviation
from prahmlab.waveguide.modes import CombinedSampler

OMEGA = 2.0 * math.pi


@pytest.mark.parametrize("M", [0, 1, 2, 5])
@pytest.mark.parametrize("phi", [0.0, math.pi / 4, math.pi / 2])
def test_resonance_conditions(M, phi):
    p = packet_params(M, phi, OMEGA)
    assert p.Omega == pytest.approx((2 * M + 1) * OMEGA / 2, rel=1e-15)
    assert p.tau0 == pytest.approx(1.0, rel=1e-12)
    assert p.tau2 - p.tau1 == pytest.approx(phi / p.Omega, abs=1e-15)
    assert p.combined_residual == pytest.approx(0.0, abs=1e-12)
    assert p.degenerate_tau0 == pytest.approx(2 * M * math.pi / p.Omega)


def test_trapped_periods_lower_the_frequency():
    p = packet_params(2, math.pi / 2, OMEGA, Q=4)
    assert p.Omega == pytest.approx(5 * OMEGA / 8)
    assert p.tau0 == pytest.approx(4.0)


def test_ground_state_degenerate_window_is_empty():
    assert packet_params(0, math.pi / 2, OMEGA).degenerate_tau0 == 0.0


@pytest.mark.parametrize(("M", "Q"), [(-1, 1), (0, 0)])
def test_invalid_packet_numbers(M, Q):
    with pytest.raises(PacketError):
        packet_params(M, 0.0, OMEGA, Q)


@pytest.mark.parametrize(("M", "phi"), [(0, math.pi), (1, -3 * math.pi), (2, 6 * math.pi)])
def test_phi_out_of_range(M, phi):
    with pytest.raises(PhiOutOfRange):
        packet_params(M, phi, OMEGA)


def test_packet_spec_is_lazy(te_mode):
    spec = PacketSpec(M=0, mode=te_mode, phi=4.0)
    with pytest.raises(PhiOutOfRange):
        _ = spec.Omega
    assert spec.with_M(2).Omega == pytest.approx(5 * OMEGA / 2)


def test_envelope_vanishes_on_and_outside_boundaries(packet_spec):
    angle, edges = envelope(packet_spec, [-packet_spec.tau1, packet_spec.tau2])
    assert angle == pytest.approx(packet_spec.phi / 2)
    np.testing.assert_allclose(edges, 0.0, atol=1e-12)
    _, outside = envelope(packet_spec, [-packet_spec.tau1 - 0.01, packet_spec.tau2 + 0.01])
    np.testing.assert_array_equal(outside, 0.0)


@pytest.mark.parametrize("advanced_map", list(AdvancedMap))
def test_closed_form_matches_superposition(packet_spec, advanced_map):
    packet = synth_packet(packet_spec, advanced_map)
    x, y = packet_spec.mode.profile.reference_point()
    t = np.linspace(-packet_spec.tau1, packet_spec.tau2, 61)[1:-1]
    z = np.zeros_like(t)
    closed = packet(x, y, z, t)
    literal = packet.superposition(x, y, z, t)
    for a, b in ((closed.Et.x, literal.Et.x), (closed.cBt.y, literal.cBt.y), (closed.cBz, literal.cBz)):
        np.testing.assert_allclose(a, b, atol=1e-12)


def test_packet_fields_do_not_depend_on_map(packet_spec):
    x, y = packet_spec.mode.profile.reference_point()
    t = np.linspace(-packet_spec.tau1, packet_spec.tau2, 41)
    z = np.zeros_like(t)
    plain = synth_packet(packet_spec, AdvancedMap.PHI0)(x, y, z, t)
    turned = synth_packet(packet_spec, AdvancedMap.PHI90)(x, y, z, t)
    np.testing.assert_array_equal(plain.Et.x, turned.Et.x)
    np.testing.assert_array_equal(plain.cBt.y, turned.cBt.y)
    np.testing.assert_array_equal(plain.cBz, turned.cBz)


def test_packet_is_zero_outside_window(packet_spec):
    packet = synth_packet(packet_spec)
    x, y = packet_spec.mode.profile.reference_point()
    t = np.array([-packet_spec.tau1 - 0.2, packet_spec.tau2 + 0.2])
    sample = packet(x, y, np.zeros(2), t)
    np.testing.assert_array_equal(sample.Et.x, 0.0)
    np.testing.assert_array_equal(sample.cBt.x, 0.0)


def test_starred_advanced_is_mapped_conjugate(packet_spec):
    packet = synth_packet(packet_spec, AdvancedMap.PHI0)
    x, y = packet_spec.mode.profile.reference_point()
    t = np.linspace(-0.3, 0.3, 7)
    starred = packet.advanced_starred(x, y, np.zeros_like(t), t)
    retarded = packet.retarded(x, y, np.zeros_like(t), t)
    np.testing.assert_allclose(starred.Et.x, -np.conj(retarded.Et.x))
    np.testing.assert_allclose(starred.cBt.y, np.conj(retarded.cBt.y))


def test_polarization_preserved_for_elliptical_base(te_mode):
    base = CombinedSampler.from_mode(te_mode, 0.6 + 0.35j)
    spec = PacketSpec(M=1, mode=te_mode)
    packet = PacketSampler(spec, base=base)
    x, y = te_mode.profile.reference_point()
    taus = np.linspace(-spec.tau1, spec.tau2, 97)[1:-1]
    assert polarization_deviation(packet, x, y, taus) <= 1e-10
    assert sigma_ratio_deviation(packet, x, y, taus) <= 1e-10


@pytest.mark.parametrize("M", [0, 3])
def test_energy_additivity(te_mode, M):
    result = energy_additivity_check(PacketSpec(M=M, mode=te_mode))
    assert result.rhs > 0.0
    assert result.deviation <= 1e-8


def test_ground_demotion_never_vanishes(te_mode):
    result = ground_demotion_dispersal(PacketSpec(M=0, mode=te_mode))
    assert result.relative_std <= 1e-12
    assert result.zero_count == 0
    assert result.magnitude > 0.0


def test_ground_demotion_preconditions(te_mode):
    with pytest.raises(NotGroundState):
        ground_demotion_dispersal(PacketSpec(M=1, mode=te_mode))
    with pytest.raises(DegenerateCancellation):
        ground_demotion_dispersal(PacketSpec(M=0, mode=te_mode, phi=math.pi))


def test_uncertainty_product(te_mode):
    spec = PacketSpec(M=0, mode=te_mode)
    report = spectrum_uncertainty(spec)
    assert math.pi <= report.product <= 8 * math.pi
    assert report.rms_product >= 0.5
    louder = spectrum_uncertainty(spec, amplitude=7.0)
    assert louder.product == pytest.approx(report.product, rel=1e-9)


def test_trapped_periods_narrow_the_bandwidth(te_mode):
    spec = PacketSpec(M=0, mode=te_mode)
    single = spectrum_uncertainty(spec)
    quad = spectrum_uncertainty(replace(spec, Q=4))
    assert quad.delta_t == pytest.approx(4 * single.delta_t, rel=1e-9)
    assert single.delta_omega / quad.delta_omega == pytest.approx(4.0, rel=0.2)
    assert quad.product == pytest.approx(single.product, rel=0.2)


def test_velocity_mode(te_mode):
    mode = velocity_mode(te_mode, n1=1e-4)
    assert mode.kappa == pytest.approx(VELOCITY_KAPPA_RATIO * mode.index * mode.omega)
    assert mode.refr.n1 == 1e-4
    assert velocity_mode(te_mode).refr.n1 == te_mode.refr.n1


def test_envelope_moves_at_group_velocity(te_mode):
    mode = velocity_mode(te_mode)
    reports = [envelope_velocity_measure(PacketSpec(M, mode)) for M in (0, 1, 2, 5)]
    for report in reports:
        assert report.velocity == pytest.approx(mode.group_velocity, rel=1e-3)
        assert report.distortion <= 1e-9
        assert report.probes == 21
    speeds = [r.velocity for r in reports]
    assert (max(speeds) - min(speeds)) / min(speeds) <= 1e-3


@pytest.mark.parametrize("M", [0, 2])
def test_dispersive_velocity_matches_beat(te_mode, M):
    spec = PacketSpec(M, velocity_mode(te_mode, n1=1e-4))
    report = envelope_velocity_measure(spec)
    assert report.velocity == pytest.approx(beat_velocity_closed_form(spec), rel=1e-9)
    assert report.velocity == pytest.approx(spec.mode.group_velocity, rel=5e-3)


def test_velocity_needs_two_probes(te_mode):
    spec = PacketSpec(0, velocity_mode(te_mode))
    with pytest.raises(NeedTwoProbes):
        envelope_velocity_measure(spec, [0.1, 0.1])
