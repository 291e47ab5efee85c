"""Finite-difference and spectral derivative operators on a FieldGrid.

All operators return values on the same evaluation set: the centre z plane, the
interior time samples and, unless the cross-section is periodic, the interior
transverse samples.
"""

from typing import Any, TypeAlias

import numpy as np
import numpy.typing as npt
from scipy import fft

from prahmlab.algebra import SigmaRotation, TransverseVec, rotate
from prahmlab.core.exceptions import GridTooSmall
from prahmlab.maxwell.grid import FieldGrid

Array: TypeAlias = npt.NDArray[Any]


def spectral_derivative(values: Array, spacing: float, axis: int) -> Array:
    """Derivative of a periodic, uniformly sampled array along `axis`."""
    count = values.shape[axis]
    wavenumbers = 2.0 * np.pi * fft.fftfreq(count, d=spacing)
    if count % 2 == 0:
        wavenumbers[count // 2] = 0.0
    shape = [1] * values.ndim
    shape[axis] = count
    return fft.ifft(1j * wavenumbers.reshape(shape) * fft.fft(values, axis=axis), axis=axis)


class Stencil:
    """Derivative operators in the frame co-rotating with the grid's helical angle.

    With θ(z, t) the stored rotation, the transverse gradient of a scalar is Θ∇s and
    the divergence and curl of a vector V act on Θ⁻¹V. Without rotation these reduce
    to the ordinary operators.
    """

    def __init__(self, grid: FieldGrid) -> None:
        spec = grid.spec
        for axis, size in (("z", spec.nz), ("t", spec.nt), ("x", spec.nx), ("y", spec.ny)):
            if size < 3:
                raise GridTooSmall(axis, size)
        self.spec = spec
        self.c = spec.center
        self.periodic = spec.periodic_xy
        self.xy = slice(None) if spec.periodic_xy else slice(1, -1)
        self.theta = grid.theta

    def center(self, f: Array) -> Array:
        return f[self.c, 1:-1][:, self.xy, self.xy]

    def dz(self, f: Array) -> Array:
        plane = (f[self.c + 1, 1:-1] - f[self.c - 1, 1:-1]) / (2.0 * self.spec.hz)
        return plane[:, self.xy, self.xy]

    def dt(self, f: Array) -> Array:
        plane = (f[self.c, 2:] - f[self.c, :-2]) / (2.0 * self.spec.ht)
        return plane[:, self.xy, self.xy]

    def dx(self, f: Array) -> Array:
        plane = f[self.c, 1:-1]
        if self.periodic:
            return spectral_derivative(plane, self.spec.hx, axis=1)
        return (plane[:, 2:, 1:-1] - plane[:, :-2, 1:-1]) / (2.0 * self.spec.hx)

    def dy(self, f: Array) -> Array:
        plane = f[self.c, 1:-1]
        if self.periodic:
            return spectral_derivative(plane, self.spec.hy, axis=2)
        return (plane[:, 1:-1, 2:] - plane[:, 1:-1, :-2]) / (2.0 * self.spec.hy)

    def center_vec(self, v: TransverseVec) -> TransverseVec:
        return TransverseVec(self.center(v.x), self.center(v.y))

    def dz_vec(self, v: TransverseVec) -> TransverseVec:
        return TransverseVec(self.dz(v.x), self.dz(v.y))

    def dt_vec(self, v: TransverseVec) -> TransverseVec:
        return TransverseVec(self.dt(v.x), self.dt(v.y))

    def _to_frame(self, v: TransverseVec) -> TransverseVec:
        if self.theta is None:
            return v
        return rotate(SigmaRotation(-self.theta[:, :, None, None]), v)

    def grad(self, s: Array) -> TransverseVec:
        g = TransverseVec(self.dx(s), self.dy(s))
        if self.theta is None:
            return g
        return rotate(SigmaRotation(self.theta[self.c, 1:-1][:, None, None]), g)

    def div(self, v: TransverseVec) -> Array:
        w = self._to_frame(v)
        return self.dx(w.x) + self.dy(w.y)

    def curl(self, v: TransverseVec) -> Array:
        """(σ∇)ᵀV = ∂x V_y - ∂y V_x."""
        w = self._to_frame(v)
        return self.dx(w.y) - self.dy(w.x)
