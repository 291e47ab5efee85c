"""Sampled fields and finite-difference Maxwell residuals."""

from prahmlab.maxwell.grid import FieldGrid, FieldMapping, GridSpec, materialize, zero_grid
from prahmlab.maxwell.lightcone import (
    LightConeFields,
    lightcone_decompose,
    lightcone_scalar,
    residual_lightcone,
)
from prahmlab.maxwell.residual import (
    TE_EQUATIONS,
    TM_EQUATIONS,
    Sources,
    convergence_order,
    residual_scale,
    residual_te,
    residual_tm,
)
from prahmlab.maxwell.stencil import Stencil, spectral_derivative
from prahmlab.maxwell.symmetry import sigma_time_reverse

__all__ = [
    "TE_EQUATIONS",
    "TM_EQUATIONS",
    "FieldGrid",
    "FieldMapping",
    "GridSpec",
    "LightConeFields",
    "Sources",
    "Stencil",
    "convergence_order",
    "lightcone_decompose",
    "lightcone_scalar",
    "materialize",
    "residual_lightcone",
    "residual_scale",
    "residual_te",
    "residual_tm",
    "sigma_time_reverse",
    "spectral_derivative",
    "zero_grid",
]
