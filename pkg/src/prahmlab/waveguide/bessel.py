"""Integer-order Bessel functions J_0..J_m by Miller's downward recurrence."""

import math
from typing import Any

import numpy as np
import numpy.typing as npt

_RESCALE_AT = 1e10
_RESCALE_BY = 1e-10


def _start_order(order_max: int, x_max: float) -> int:
    """Even starting order for the backward recurrence."""
    base = max(order_max, int(x_max), 1)
    return 2 * ((base + int(math.sqrt(40.0 * base)) + 10) // 2)


def bessel_jn(order_max: int, u: npt.ArrayLike) -> npt.NDArray[np.float64]:
    """Evaluate J_0(u) .. J_order_max(u).

    The recurrence J_{k-1} = (2k/u)J_k - J_{k+1} runs downward from a trial value and is
    normalised with J_0 + 2ΣJ_{2k} = 1, rescaling on the way to avoid overflow.

    Args:
        order_max: Highest order required (>= 0).
        u: Real arguments, any shape.

    Returns:
        Array of shape (order_max + 1, *u.shape).
    """
    if order_max < 0:
        raise ValueError(f"order_max must be >= 0, got {order_max}")

    arg = np.asarray(u, dtype=np.float64)
    ax = np.abs(arg)
    small = ax < 1e-12
    safe = np.where(small, 1.0, ax)

    out = np.zeros((order_max + 1, *arg.shape))
    j_next = np.zeros(arg.shape)
    j_cur = np.full(arg.shape, 1e-30)
    norm = np.zeros(arg.shape)

    start = _start_order(order_max, float(ax.max()) if ax.size else 0.0)
    for k in range(start, 0, -1):
        j_prev = (2.0 * k / safe) * j_cur - j_next
        j_next, j_cur = j_cur, j_prev
        order = k - 1
        if order <= order_max:
            out[order] = j_cur
        if order == 0:
            norm = norm + j_cur
        elif order % 2 == 0:
            norm = norm + 2.0 * j_cur

        big = np.abs(j_cur) > _RESCALE_AT
        if np.any(big):
            j_cur = np.where(big, j_cur * _RESCALE_BY, j_cur)
            j_next = np.where(big, j_next * _RESCALE_BY, j_next)
            norm = np.where(big, norm * _RESCALE_BY, norm)
            out[:, big] *= _RESCALE_BY

    out /= norm

    # J_m(-u) = (-1)^m J_m(u)
    negative = arg < 0
    for m in range(1, order_max + 1, 2):
        out[m] = np.where(negative, -out[m], out[m])

    out[:, small] = 0.0
    out[0, small] = 1.0
    return out


def bessel_j(order: int, u: npt.ArrayLike) -> npt.NDArray[Any]:
    """Single order J_order(u); negative orders use J_{-m} = (-1)^m J_m."""
    m = abs(order)
    values = bessel_jn(m, u)[m]
    if order < 0 and m % 2 == 1:
        return -values
    return values
