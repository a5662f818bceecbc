"""Cartoon phantom rasterization f = f0 + (jump + f1) * chi_B at cell centers."""

import logging
import math
from pathlib import Path

import numpy as np
from numpy.typing import NDArray

from directional_cs.config.standards import PhantomKind
from directional_cs.models.grid import RealGrid
from directional_cs.models.phantom import Polynomial, PhantomSpec

logger = logging.getLogger(__name__)

_RANGE_SLACK = 1e-12


class PhantomError(Exception):
    """Raised when a phantom cannot be rendered inside the admissible intensity range."""

    def __init__(self, message: str, low: float | None = None, high: float | None = None):
        super().__init__(message)
        self.low = low
        self.high = high


def cell_centers(grid_size: int) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """(x, y) of every pixel center; row i maps to y, column j to x."""
    centers = (np.arange(grid_size) + 0.5) / grid_size
    y, x = np.meshgrid(centers, centers, indexing="ij")
    return x, y


def evaluate_polynomial(
    coefficients: Polynomial, x: NDArray[np.float64], y: NDArray[np.float64]
) -> NDArray[np.float64]:
    """c + cx x + cy y + cxx x^2 + cxy x y + cyy y^2."""
    c, cx, cy, cxx, cxy, cyy = coefficients
    return c + cx * x + cy * y + cxx * x * x + cxy * x * y + cyy * y * y


def region_indicator(spec: PhantomSpec, x: NDArray[np.float64], y: NDArray[np.float64]) -> NDArray[np.bool_]:
    """chi_B: points inside the (rotated) ellipse, boundary included."""
    a, b = spec.semi_axes
    theta = 0.0 if spec.kind == PhantomKind.DISK else spec.rotation
    dx, dy = x - spec.center[0], y - spec.center[1]
    along = math.cos(theta) * dx + math.sin(theta) * dy
    across = -math.sin(theta) * dx + math.cos(theta) * dy
    return (along / a) ** 2 + (across / b) ** 2 <= 1.0


def render(spec: PhantomSpec) -> RealGrid:
    """Rasterize a cartoon phantom on its N x N grid.

    Raises:
        PhantomError: If intensities leave [0, 1]
    """
    x, y = cell_centers(spec.grid_size)
    inside = region_indicator(spec, x, y)
    image = evaluate_polynomial(spec.background, x, y)
    image = image + inside * (spec.jump + evaluate_polynomial(spec.interior, x, y))

    low, high = float(image.min()), float(image.max())
    if low < -_RANGE_SLACK or high > 1.0 + _RANGE_SLACK:
        raise PhantomError(
            f"Phantom intensities span [{low:.4f}, {high:.4f}], outside [0, 1]", low=low, high=high
        )
    logger.debug("Rendered %s phantom N=%d (%d interior pixels)", spec.kind.value, spec.grid_size, int(inside.sum()))
    return RealGrid(np.clip(image, 0.0, 1.0))


def default_spec(kind: PhantomKind, grid_size: int = 256) -> PhantomSpec:
    """Reference phantom of each kind."""
    if kind == PhantomKind.DISK:
        return PhantomSpec(kind=kind, grid_size=grid_size)
    if kind == PhantomKind.ELLIPSE:
        return PhantomSpec(kind=kind, grid_size=grid_size, radii=(0.3, 0.18), rotation=math.pi / 6)
    return PhantomSpec(
        kind=kind,
        grid_size=grid_size,
        center=(0.45, 0.55),
        radii=(0.28, 0.2),
        rotation=-math.pi / 8,
        background=(0.1, 0.1, 0.05, 0.0, 0.0, 0.0),
        interior=(0.0, 0.0, 0.0, -0.1, 0.05, -0.1),
        jump=0.6,
    )


def load_spec(path: Path) -> PhantomSpec:
    """Read a phantom spec from JSON."""
    return PhantomSpec.model_validate_json(path.read_text(encoding="utf-8"))


def downsample(u: RealGrid) -> RealGrid:
    """2 x 2 block average."""
    rows, cols = u.shape
    return RealGrid(u.data.reshape(rows // 2, 2, cols // 2, 2).mean(axis=(1, 3)))
