"""Grids, 2D DFT, circular convolution, metrics and grid file formats."""

from directional_cs.models.grid import SpectralError
from directional_cs.spectral.io import (
    GridFormatError,
    decode_grid,
    encode_grid,
    read_grid,
    to_pgm_bytes,
    write_grid,
    write_pgm,
)
from directional_cs.spectral.metrics import mse, psnr
from directional_cs.spectral.transforms import (
    centered_frequencies,
    circ_conv,
    dft2,
    filter_in_frequency,
    frequency_mesh,
    idft2,
    storage_index,
)

__all__ = [
    "SpectralError",
    "GridFormatError",
    "decode_grid",
    "encode_grid",
    "read_grid",
    "to_pgm_bytes",
    "write_grid",
    "write_pgm",
    "mse",
    "psnr",
    "centered_frequencies",
    "circ_conv",
    "dft2",
    "filter_in_frequency",
    "frequency_mesh",
    "idft2",
    "storage_index",
]
