"""Meyer-type scale windows with an exact on-grid partition of unity.

With r(xi) = max(|xi1|, |xi2|) / (N/2), the squared low-pass profiles

    P_j(r) = 1 for r <= b_j,  1 - nu(r / b_j - 1) on (b_j, 2 b_j),  0 beyond,
    b_j = 2**(j - J - 1),  j = 0..J,  P_{J+1} = 1,

are nested, so |Phi|^2 = P_0 and |Psi_j|^2 = P_{j+1} - P_j telescope to 1.
Psi_j lives on the max-norm annulus b_j N/2 < max(|xi1|, |xi2|) < 2 b_{j+1} N/2.
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from directional_cs.models.grid import ComplexGrid, is_power_of_two
from directional_cs.spectral.transforms import frequency_mesh


def meyer_aux(x: NDArray[np.float64]) -> NDArray[np.float64]:
    """Meyer auxiliary function nu: 0 below 0, 1 above 1, smooth in between."""
    t = np.clip(x, 0.0, 1.0)
    return t**4 * (35.0 - 84.0 * t + 70.0 * t**2 - 20.0 * t**3)


def lowpass_profile(r: NDArray[np.float64], cutoff: float) -> NDArray[np.float64]:
    """Squared low-pass profile: 1 up to ``cutoff``, 0 from ``2 * cutoff``."""
    return 1.0 - meyer_aux(r / cutoff - 1.0)


def minimum_grid_size(finest_scale: int) -> int:
    return 4 * 2**finest_scale


@dataclass(frozen=True, eq=False)
class ScaleWindows:
    """Scaling window Phi and detail windows Psi_0..Psi_J sampled on the DFT grid."""

    grid_size: int
    finest_scale: int
    scaling: ComplexGrid
    details: tuple[ComplexGrid, ...]

    def partition_sum(self) -> NDArray[np.float64]:
        """|Phi|^2 + sum_j |Psi_j|^2 at every grid frequency."""
        total = np.abs(self.scaling.data) ** 2
        for window in self.details:
            total = total + np.abs(window.data) ** 2
        return total

    def detail_energy(self) -> NDArray[np.float64]:
        """sum_j |Psi_j|^2."""
        total = np.zeros((self.grid_size, self.grid_size))
        for window in self.details:
            total = total + np.abs(window.data) ** 2
        return total


def normalized_radius(grid_size: int) -> NDArray[np.float64]:
    """max(|n1|, |n2|) / (N/2) for every storage cell."""
    n1, n2 = frequency_mesh(grid_size)
    return np.maximum(np.abs(n1), np.abs(n2)) / (grid_size / 2.0)


def build_scale_windows(grid_size: int, finest_scale: int) -> ScaleWindows:
    """Sample the scale windows for an N x N grid up to scale J.

    Raises:
        ValueError: If N is not a power of two or N < 4 * 2**J
    """
    if finest_scale < 0:
        raise ValueError(f"Finest scale must be nonnegative, got {finest_scale}")
    if not is_power_of_two(grid_size):
        raise ValueError(f"Grid size must be a power of two, got {grid_size}")
    required = minimum_grid_size(finest_scale)
    if grid_size < required:
        raise ValueError(
            f"Grid size {grid_size} too small for J={finest_scale}; need at least {required}"
        )

    radius = normalized_radius(grid_size)
    profiles = [
        lowpass_profile(radius, 2.0 ** (j - finest_scale - 1)) for j in range(finest_scale + 1)
    ]
    profiles.append(np.ones_like(radius))

    scaling = ComplexGrid(np.sqrt(profiles[0]))
    details = tuple(
        ComplexGrid(np.sqrt(np.clip(profiles[j + 1] - profiles[j], 0.0, None)))
        for j in range(finest_scale + 1)
    )
    return ScaleWindows(
        grid_size=grid_size,
        finest_scale=finest_scale,
        scaling=scaling,
        details=details,
    )
