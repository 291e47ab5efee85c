"""Residuals of the TE and TM component forms of Maxwell's equations."""

import logging
import math
from dataclasses import dataclass
from typing import Any, TypeAlias

import numpy as np
import numpy.typing as npt

from prahmlab.algebra import TransverseVec, sigma_apply
from prahmlab.core.exceptions import DegenerateResidual, SpacingMismatch
from prahmlab.core.models import ResidualReport
from prahmlab.maxwell.grid import FieldGrid
from prahmlab.maxwell.stencil import Stencil

logger = logging.getLogger(__name__)

Array: TypeAlias = npt.NDArray[Any]

TE_EQUATIONS = ("gauss_b", "faraday_z", "ampere_t")
TM_EQUATIONS = ("gauss_d", "ampere_z", "faraday_t")


@dataclass(frozen=True)
class Sources:
    """Optional charge and current densities sampled on the same grid."""

    Jt: TransverseVec | None = None
    Jz: Array | None = None
    rho: Array | None = None


def residual_scale(grid: FieldGrid) -> float:
    """n·ω·max|field|, or 1 for an all-zero configuration."""
    peak = grid.max_field()
    if peak == 0.0:
        return 1.0
    return abs(grid.n * grid.omega) * peak


def _magnitude(value: Array | TransverseVec) -> Array:
    if isinstance(value, TransverseVec):
        return np.asarray(value.norm())
    return np.abs(value)


def summarize(
    form: str, equations: dict[str, Array | TransverseVec], scale: float, spacing: float
) -> ResidualReport:
    """Normalised L2 (RMS over evaluation points) and L∞ norms per equation."""
    l2: dict[str, float] = {}
    linf: dict[str, float] = {}
    for name, value in equations.items():
        magnitude = _magnitude(value)
        l2[name] = float(np.sqrt(np.mean(magnitude**2))) / scale
        linf[name] = float(np.max(magnitude)) / scale
    return ResidualReport(form=form, l2=l2, linf=linf, scale=scale, spacing=spacing)


def te_equations(grid: FieldGrid, sources: Sources | None = None) -> dict[str, Array | TransverseVec]:
    """Raw TE component equations on the stencil's evaluation set."""
    s = Stencil(grid)
    dt_field, _ = grid.displacement()
    gauss_b = s.div(grid.cBt) + s.dz(grid.cBz)
    faraday_z = s.div(sigma_apply(grid.Et)) - s.dt(grid.cBz)
    ampere_t = s.dz_vec(sigma_apply(grid.cBt)) - s.dt_vec(dt_field) - sigma_apply(s.grad(grid.cBz))
    if sources is not None and sources.Jt is not None:
        ampere_t = ampere_t + s.center_vec(sources.Jt)
    return {"gauss_b": gauss_b, "faraday_z": faraday_z, "ampere_t": ampere_t}


def tm_equations(grid: FieldGrid, sources: Sources | None = None) -> dict[str, Array | TransverseVec]:
    """Raw TM component equations on the stencil's evaluation set."""
    s = Stencil(grid)
    dt_field, dz_field = grid.displacement()
    gauss_d = s.div(dt_field) + s.dz(dz_field)
    ampere_z = s.curl(grid.cBt) - s.dt(dz_field)
    if sources is not None:
        if sources.rho is not None:
            gauss_d = gauss_d - s.center(sources.rho)
        if sources.Jz is not None:
            ampere_z = ampere_z + s.center(sources.Jz)
    faraday_t = (
        s.dz_vec(sigma_apply(grid.Et)) + s.dt_vec(grid.cBt) - sigma_apply(s.grad(grid.Ez))
    ) * grid.n**2
    return {"gauss_d": gauss_d, "ampere_z": ampere_z, "faraday_t": faraday_t}


def residual_te(grid: FieldGrid, sources: Sources | None = None) -> ResidualReport:
    """Normalised residuals of the TE form.

    Args:
        grid: Sampled fields; a helical rotation angle is honoured if present.
        sources: Optional transverse current J_T.

    Returns:
        Residual report with equations gauss_b, faraday_z and ampere_t.
    """
    report = summarize("te", te_equations(grid, sources), residual_scale(grid), grid.spec.spacing)
    logger.debug("TE residual l2=%s", report.l2)
    return report


def residual_tm(grid: FieldGrid, sources: Sources | None = None) -> ResidualReport:
    """Normalised residuals of the TM form (gauss_d, ampere_z, faraday_t)."""
    report = summarize("tm", tm_equations(grid, sources), residual_scale(grid), grid.spec.spacing)
    logger.debug("TM residual l2=%s", report.l2)
    return report


def convergence_order(coarse: ResidualReport, fine: ResidualReport) -> dict[str, float]:
    """Observed order log2(L2_coarse / L2_fine) per equation.

    The un-normalised norms are compared so that a slightly different field maximum
    on the finer lattice does not bias the estimate.
    """
    if not math.isclose(fine.spacing, coarse.spacing / 2.0, rel_tol=1e-9):
        raise SpacingMismatch(coarse.spacing, fine.spacing)
    orders: dict[str, float] = {}
    for name, coarse_l2 in coarse.l2.items():
        raw_coarse = coarse_l2 * coarse.scale
        raw_fine = fine.l2[name] * fine.scale
        if raw_coarse == 0.0 or raw_fine == 0.0:
            raise DegenerateResidual(name)
        orders[name] = math.log2(raw_coarse / raw_fine)
    return orders
