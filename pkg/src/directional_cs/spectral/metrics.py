"""Image-quality metrics."""

import math

import numpy as np

from directional_cs.models.grid import RealGrid


def mse(u: RealGrid, v: RealGrid) -> float:
    """Mean squared error between two grids of equal shape."""
    if u.shape != v.shape:
        raise ValueError(f"Grids must share a shape, got {u.shape} and {v.shape}")
    return float(np.mean((u.data - v.data) ** 2))


def psnr(u: RealGrid, v: RealGrid, peak: float = 1.0) -> float:
    """Peak signal-to-noise ratio 10 log10(peak^2 / MSE) in decibels.

    Returns +inf when the grids are identical.

    Raises:
        ValueError: If the shapes differ or peak is not positive
    """
    if peak <= 0:
        raise ValueError(f"peak must be positive, got {peak}")
    error = mse(u, v)
    if error == 0.0:
        return math.inf
    return 10.0 * math.log10(peak * peak / error)
