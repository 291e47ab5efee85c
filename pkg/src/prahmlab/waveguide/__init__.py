"""Analytic waveguide modes, transverse profiles and the dispersion relation."""

from prahmlab.waveguide.bessel import bessel_j, bessel_jn
from prahmlab.waveguide.modes import (
    CombinedSampler,
    FieldSample,
    ModeKind,
    ModeSampler,
    ModeSpec,
    RefractiveModel,
    axial_wavenumber,
    build_mode,
    group_velocity,
    mode_sampler,
    phase_velocity,
    signed_wavenumber,
    te_mode_sampler,
    tm_mode_sampler,
)
from prahmlab.waveguide.profiles import (
    PROFILE_REGISTRY,
    BesselCircular,
    ProfileKind,
    QuadratureCell,
    SeparableCosine,
    TransverseProfile,
    build_profile,
    profile_helmholtz_residual,
)

__all__ = [
    "PROFILE_REGISTRY",
    "BesselCircular",
    "CombinedSampler",
    "FieldSample",
    "ModeKind",
    "ModeSampler",
    "ModeSpec",
    "ProfileKind",
    "QuadratureCell",
    "RefractiveModel",
    "SeparableCosine",
    "TransverseProfile",
    "axial_wavenumber",
    "bessel_j",
    "bessel_jn",
    "build_mode",
    "build_profile",
    "group_velocity",
    "mode_sampler",
    "phase_velocity",
    "profile_helmholtz_residual",
    "signed_wavenumber",
    "te_mode_sampler",
    "tm_mode_sampler",
]
