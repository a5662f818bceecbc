"""Fourier measurements y = P_Delta F(u)."""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np
from numpy.typing import NDArray

from directional_cs.models.grid import ComplexGrid, RealGrid, require_square_power_of_two
from directional_cs.models.mask import SamplingMask
from directional_cs.sampling.masks import mask_apply
from directional_cs.spectral.io import read_grid, write_grid
from directional_cs.spectral.transforms import dft2

logger = logging.getLogger(__name__)


class PipelineError(Exception):
    """Raised when pipeline inputs do not fit together."""

    def __init__(self, message: str, expected: int | None = None, actual: int | None = None):
        super().__init__(message)
        self.expected = expected
        self.actual = actual


@dataclass(frozen=True, eq=False)
class MeasurementSet:
    """Masked spectrum of an N x N image; zero off the mask."""

    grid_size: int
    mask: SamplingMask = field(repr=False)
    samples: ComplexGrid = field(repr=False)

    def __post_init__(self) -> None:
        if self.mask.grid_size != self.grid_size or self.samples.shape != (self.grid_size, self.grid_size):
            raise PipelineError(
                f"Measurement grid {self.samples.shape} does not match mask N={self.mask.grid_size}",
                expected=self.mask.grid_size,
                actual=self.samples.rows,
            )
        if np.any(self.samples.data[~self.mask.indicator()] != 0):
            raise PipelineError("Measurements must vanish off the mask")

    @property
    def is_zero(self) -> bool:
        return not np.any(self.samples.data)

    def selection(self) -> tuple[NDArray[np.int64], NDArray[np.int64]]:
        """Storage (row, col) indices of the mask points, in union order."""
        points = np.asarray(self.mask.union_points(), dtype=np.int64).reshape(-1, 2)
        return points[:, 0] % self.grid_size, points[:, 1] % self.grid_size

    def sidecar(self) -> dict:
        """JSON sidecar describing the measurement."""
        return {
            "N": self.grid_size,
            "cardinality": self.mask.cardinality,
            "nonzero": int(np.count_nonzero(self.samples.data)),
            "mask": self.mask.to_dict(),
        }


def forward_measure(u: RealGrid, mask: SamplingMask) -> MeasurementSet:
    """Sample the spectrum of ``u`` on the mask.

    Raises:
        ValueError: If u is not square with power-of-two side
        PipelineError: If the image size differs from the mask grid
    """
    size = require_square_power_of_two(u.shape, "image")
    if size != mask.grid_size:
        raise PipelineError(
            f"Image is {size}x{size} but the mask is for N={mask.grid_size}",
            expected=mask.grid_size,
            actual=size,
        )
    samples = mask_apply(dft2(u), mask)
    logger.debug("Measured %d of %d frequencies", mask.cardinality, size * size)
    return MeasurementSet(grid_size=size, mask=mask, samples=samples)


def write_measurements(measurements: MeasurementSet, grid_path: Path, sidecar_path: Path) -> None:
    """Write the masked spectrum (complex CIFG) and its JSON sidecar."""
    write_grid(grid_path, measurements.samples)
    sidecar_path.write_text(json.dumps(measurements.sidecar(), indent=2) + "\n", encoding="utf-8")


def read_measurements(grid_path: Path, sidecar_path: Path) -> MeasurementSet:
    """Read measurements written by ``write_measurements``.

    Raises:
        PipelineError: If the stored grid is not complex or does not match the mask
    """
    samples = read_grid(grid_path)
    if not isinstance(samples, ComplexGrid):
        raise PipelineError(f"{grid_path} does not hold a complex spectrum")
    sidecar = json.loads(sidecar_path.read_text(encoding="utf-8"))
    mask = SamplingMask.from_dict(sidecar["mask"])
    return MeasurementSet(grid_size=mask.grid_size, mask=mask, samples=samples)
