"""2D DFT, inverse and circular convolution on the centered frequency grid.

Conventions:
    F(a)(xi) = sum_n a(n) exp(-2 pi i n . xi / N)  (unnormalized forward)
    inverse carries the 1 / (rows * cols) factor.

Spectra are stored with DC at index (0, 0). A centered frequency n in
[-N/2, N/2) lives at storage index n mod N; ``centered_frequencies`` gives
the inverse map.
"""

import numpy as np
from numpy.typing import NDArray

from directional_cs.models.grid import ComplexGrid, Grid, RealGrid


def centered_frequencies(size: int) -> NDArray[np.int64]:
    """Centered frequency of each storage index: 0, 1, ..., N/2-1, -N/2, ..., -1."""
    return np.fft.fftfreq(size, d=1.0 / size).round().astype(np.int64)


def storage_index(frequency: int, size: int) -> int:
    """Storage index of a centered frequency."""
    return frequency % size


def frequency_mesh(size: int) -> tuple[NDArray[np.int64], NDArray[np.int64]]:
    """Centered (n1, n2) of every storage cell of an N x N spectrum."""
    freqs = centered_frequencies(size)
    n1, n2 = np.meshgrid(freqs, freqs, indexing="ij")
    return n1, n2


def dft2(u: Grid) -> ComplexGrid:
    """Unnormalized forward 2D DFT."""
    return ComplexGrid(np.fft.fft2(u.data))


def idft2(spectrum: ComplexGrid) -> ComplexGrid:
    """Inverse 2D DFT (1 / (rows * cols) normalization)."""
    return ComplexGrid(np.fft.ifft2(spectrum.data))


def circ_conv(u: RealGrid, h: RealGrid) -> RealGrid:
    """Discrete circular convolution via the FFT.

    Raises:
        ValueError: If the shapes differ
    """
    if u.shape != h.shape:
        raise ValueError(f"Convolution operands must share a shape, got {u.shape} and {h.shape}")
    product = np.fft.fft2(u.data) * np.fft.fft2(h.data)
    return RealGrid(np.fft.ifft2(product).real)


def filter_in_frequency(u: Grid, spectrum: NDArray[np.complex128]) -> ComplexGrid:
    """Circular convolution of ``u`` with the filter whose DFT is ``spectrum``."""
    if u.shape != spectrum.shape:
        raise ValueError(f"Filter spectrum {spectrum.shape} does not match grid {u.shape}")
    return ComplexGrid(np.fft.ifft2(np.fft.fft2(u.data) * spectrum))
