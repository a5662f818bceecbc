"""Immutable real and complex rasters."""

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import ArrayLike, NDArray


class SpectralError(Exception):
    """Raised when grid data cannot be used for spectral computations."""

    def __init__(self, message: str, count: int = 0):
        super().__init__(message)
        self.count = count


def _frozen_array(values: ArrayLike, dtype: type) -> NDArray:
    array = np.array(values, dtype=dtype, copy=True)
    if array.ndim != 2:
        raise ValueError(f"Grid data must be two-dimensional, got shape {array.shape}")
    if array.shape[0] < 1 or array.shape[1] < 1:
        raise ValueError(f"Grid must have at least one row and column, got shape {array.shape}")
    bad = int(np.count_nonzero(~np.isfinite(array)))
    if bad:
        raise SpectralError(f"Grid contains {bad} non-finite value(s)", count=bad)
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class RealGrid:
    """Row-major N x M real raster (intensities nominally in [0, 1])."""

    data: NDArray[np.float64] = field(repr=False)

    def __post_init__(self) -> None:
        if np.iscomplexobj(self.data):
            raise ValueError("RealGrid data must be real; use ComplexGrid for complex samples")
        object.__setattr__(self, "data", _frozen_array(self.data, np.float64))

    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def cols(self) -> int:
        return int(self.data.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RealGrid":
        return cls(np.zeros((rows, cols)))

    def __repr__(self) -> str:
        return f"RealGrid(rows={self.rows}, cols={self.cols})"


@dataclass(frozen=True, eq=False)
class ComplexGrid:
    """Row-major N x M complex raster; spectra keep DC at storage index (0, 0)."""

    data: NDArray[np.complex128] = field(repr=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "data", _frozen_array(self.data, np.complex128))

    @property
    def rows(self) -> int:
        return int(self.data.shape[0])

    @property
    def cols(self) -> int:
        return int(self.data.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ComplexGrid":
        return cls(np.zeros((rows, cols), dtype=np.complex128))

    def real_part(self) -> RealGrid:
        return RealGrid(self.data.real)

    def __repr__(self) -> str:
        return f"ComplexGrid(rows={self.rows}, cols={self.cols})"


Grid = RealGrid | ComplexGrid


def is_power_of_two(value: int) -> bool:
    """True when value is a positive power of two."""
    return value >= 1 and (value & (value - 1)) == 0


def require_square_power_of_two(shape: tuple[int, int], what: str = "grid") -> int:
    """Return N for an N x N grid with N a power of two.

    Raises:
        ValueError: If the shape is not square or N is not a power of two
    """
    rows, cols = shape
    if rows != cols:
        raise ValueError(f"{what} must be square, got {rows}x{cols}")
    if not is_power_of_two(rows):
        raise ValueError(f"{what} side must be a power of two, got {rows}")
    return rows
