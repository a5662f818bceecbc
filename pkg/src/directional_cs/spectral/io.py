"""CIFG v1 grid files and PGM export.

CIFG v1 layout: magic ``CIFG``, u8 version, u8 dtype (0 = f64 real,
1 = c128 interleaved), u32 LE rows, u32 LE cols, then the row-major
little-endian payload.
"""

import struct
from pathlib import Path

import numpy as np
from numpy.typing import NDArray

from directional_cs.config.standards import (
    CIFG_DTYPE_COMPLEX,
    CIFG_DTYPE_REAL,
    CIFG_HEADER_FORMAT,
    CIFG_MAGIC,
    CIFG_VERSION,
)
from directional_cs.models.grid import ComplexGrid, Grid, RealGrid

_HEADER_SIZE = struct.calcsize(CIFG_HEADER_FORMAT)


class GridFormatError(Exception):
    """Raised for malformed grid files."""

    def __init__(self, message: str, path: Path | None = None):
        super().__init__(message)
        self.path = path


def encode_grid(grid: Grid) -> bytes:
    """Serialize a grid to CIFG v1 bytes."""
    if isinstance(grid, ComplexGrid):
        dtype_code, payload = CIFG_DTYPE_COMPLEX, grid.data.astype("<c16").tobytes()
    else:
        dtype_code, payload = CIFG_DTYPE_REAL, grid.data.astype("<f8").tobytes()
    header = struct.pack(
        CIFG_HEADER_FORMAT, CIFG_MAGIC, CIFG_VERSION, dtype_code, grid.rows, grid.cols
    )
    return header + payload


def decode_grid(blob: bytes, path: Path | None = None) -> Grid:
    """Parse CIFG v1 bytes.

    Raises:
        GridFormatError: On bad magic, version, dtype or payload size
    """
    if len(blob) < _HEADER_SIZE:
        raise GridFormatError("Truncated CIFG header", path)
    magic, version, dtype_code, rows, cols = struct.unpack_from(CIFG_HEADER_FORMAT, blob)
    if magic != CIFG_MAGIC:
        raise GridFormatError(f"Bad magic {magic!r}, expected {CIFG_MAGIC!r}", path)
    if version != CIFG_VERSION:
        raise GridFormatError(f"Unsupported CIFG version {version}", path)
    if dtype_code == CIFG_DTYPE_REAL:
        dtype = np.dtype("<f8")
    elif dtype_code == CIFG_DTYPE_COMPLEX:
        dtype = np.dtype("<c16")
    else:
        raise GridFormatError(f"Unknown CIFG dtype code {dtype_code}", path)

    expected = rows * cols * dtype.itemsize
    payload = blob[_HEADER_SIZE:]
    if len(payload) != expected:
        raise GridFormatError(
            f"Payload has {len(payload)} bytes, expected {expected} for {rows}x{cols}", path
        )
    data = np.frombuffer(payload, dtype=dtype).reshape(rows, cols)
    if dtype_code == CIFG_DTYPE_REAL:
        return RealGrid(data)
    return ComplexGrid(data)


def write_grid(path: Path, grid: Grid) -> None:
    """Write a grid as a CIFG v1 file."""
    path.write_bytes(encode_grid(grid))


def read_grid(path: Path) -> Grid:
    """Read a CIFG v1 file."""
    return decode_grid(path.read_bytes(), path)


def to_pgm_bytes(values: NDArray[np.float64]) -> bytes:
    """Binary 8-bit PGM (P5) of values clamped to [0, 1]."""
    rows, cols = values.shape
    pixels = np.rint(np.clip(values, 0.0, 1.0) * 255.0).astype(np.uint8)
    return f"P5\n{cols} {rows}\n255\n".encode("ascii") + pixels.tobytes()


def write_pgm(path: Path, grid: RealGrid) -> None:
    """Export a real grid as a PGM image for visual inspection."""
    path.write_bytes(to_pgm_bytes(grid.data))
