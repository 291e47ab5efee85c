"""Discrete symmetries of sampled field configurations."""

import logging

import numpy as np

from prahmlab.algebra import TransverseVec
from prahmlab.core.exceptions import AsymmetricWindow
from prahmlab.maxwell.grid import FieldGrid

logger = logging.getLogger(__name__)


def _flip(values: np.ndarray) -> np.ndarray:
    return values[:, ::-1].copy()


def sigma_time_reverse(grid: FieldGrid) -> FieldGrid:
    """t → -t with E → -E and B → B, realised by index reversal.

    Electric-type components (E and D) change sign and every component is mirrored
    along the time axis, as is the helical angle. The window must be symmetric about
    t = 0. Applying the map twice returns the original grid.
    """
    t = grid.spec.t()
    if grid.spec.t0 is not None and not np.isclose(t[0], -t[-1], rtol=0.0, atol=1e-12 * max(1.0, abs(t[-1]))):
        raise AsymmetricWindow(float(t[0]), float(t[-1]))

    et = grid.Et
    reversed_et = TransverseVec(-_flip(et.x), -_flip(et.y))
    reversed_bt = TransverseVec(_flip(grid.cBt.x), _flip(grid.cBt.y))
    dt = grid.Dt
    logger.debug("time-reversing grid of shape %s", grid.spec.shape)
    return grid.with_fields(
        Et=reversed_et,
        cBt=reversed_bt,
        Ez=-_flip(grid.Ez),
        cBz=_flip(grid.cBz),
        Dt=None if dt is None else TransverseVec(-_flip(dt.x), -_flip(dt.y)),
        Dz=None if grid.Dz is None else -_flip(grid.Dz),
        theta=None if grid.theta is None else _flip(grid.theta),
        mode=None,
    )
