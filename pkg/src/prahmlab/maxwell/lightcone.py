"""Light-cone (F±) recombination of the transverse fields."""

from dataclasses import dataclass
from typing import Any, TypeAlias

import numpy as np
import numpy.typing as npt

from prahmlab.algebra import TransverseVec, sigma_apply
from prahmlab.core.models import ResidualReport
from prahmlab.maxwell.grid import FieldGrid
from prahmlab.maxwell.residual import residual_scale, summarize
from prahmlab.maxwell.stencil import Stencil
from prahmlab.waveguide.modes import ModeKind

Array: TypeAlias = npt.NDArray[Any]


@dataclass(frozen=True)
class LightConeFields:
    """F±_TE = cB_T ∓ σE_T and F±_TM = n²E_T ± σcB_T."""

    te_plus: TransverseVec
    te_minus: TransverseVec
    tm_plus: TransverseVec
    tm_minus: TransverseVec
    n: float

    def te_magnetic(self) -> TransverseVec:
        return (self.te_plus + self.te_minus) * 0.5

    def te_sigma_electric(self) -> TransverseVec:
        return (self.te_minus - self.te_plus) * 0.5

    def tm_electric(self) -> TransverseVec:
        return (self.tm_plus + self.tm_minus) * (0.5 / self.n**2)

    def tm_sigma_magnetic(self) -> TransverseVec:
        return (self.tm_plus - self.tm_minus) * 0.5

    def reconstruction_error(self, grid: FieldGrid) -> float:
        """Max deviation of the recovered E_T and cB_T from the grid's own."""
        errors = [
            self.te_magnetic() - grid.cBt,
            self.te_sigma_electric() - sigma_apply(grid.Et),
            self.tm_electric() - grid.Et,
            self.tm_sigma_magnetic() - sigma_apply(grid.cBt),
        ]
        return float(max(np.max(e.norm()) for e in errors))


def lightcone_decompose(grid: FieldGrid) -> LightConeFields:
    sigma_e = sigma_apply(grid.Et)
    sigma_b = sigma_apply(grid.cBt)
    n2 = grid.n**2
    return LightConeFields(
        te_plus=grid.cBt - sigma_e,
        te_minus=grid.cBt + sigma_e,
        tm_plus=grid.Et * n2 + sigma_b,
        tm_minus=grid.Et * n2 - sigma_b,
        n=grid.n,
    )


def residual_lightcone(
    lc: LightConeFields,
    scalar: Array,
    like: FieldGrid,
    kind: ModeKind | str = ModeKind.TE,
) -> ResidualReport:
    """Residuals of the light-cone form.

    Equations, with ∂± = ∂z ± ∂t and g = (n² - 1)/2:

        plus:  ∇ᵀF+ + ∂+ s
        minus: ∇ᵀF- + ∂- s
        mixed: ∂+[(1+g)F- - gF+] + ∂-[(1+g)F+ - gF-] - 2∇s

    `scalar` is cB_z for TE and n²E_z for TM. `like` supplies spacing, helical frame
    and normalisation. plus/minus equal the two divergence equations combined, and
    mixed equals -2σ times the transverse curl equation, so on the same grid the
    light-cone residual lies between the standard one and twice it.
    """
    kind = ModeKind(kind)
    s = Stencil(like)
    if kind is ModeKind.TE:
        f_plus, f_minus = lc.te_plus, lc.te_minus
    else:
        f_plus, f_minus = lc.tm_plus, lc.tm_minus
    g = 0.5 * (like.n**2 - 1.0)

    d_z, d_t = s.dz(scalar), s.dt(scalar)
    plus = s.div(f_plus) + d_z + d_t
    minus = s.div(f_minus) + d_z - d_t

    a = f_minus * (1.0 + g) - f_plus * g
    b = f_plus * (1.0 + g) - f_minus * g
    mixed = (
        s.dz_vec(a) + s.dt_vec(a) + s.dz_vec(b) - s.dt_vec(b) - s.grad(scalar) * 2.0
    )
    form = f"lightcone-{kind.value.lower()}"
    return summarize(form, {"plus": plus, "minus": minus, "mixed": mixed}, residual_scale(like), like.spec.spacing)


def lightcone_scalar(grid: FieldGrid, kind: ModeKind | str) -> Array:
    """cB_z for TE, n²E_z for TM."""
    if ModeKind(kind) is ModeKind.TE:
        return grid.cBz
    return grid.Ez * grid.n**2
