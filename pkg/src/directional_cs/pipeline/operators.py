"""Per-shear measurement operators c -> P_Delta F(S_s W_J^* c) / N.

Every factor is unitary (F / N, the digital shear, the optional transpose
for the vertical cone and W_J^*), so restricting to mask rows gives a
row-orthonormal map and basis pursuit can project in closed form. The
shearlet baseline pairs the plain masked Fourier map with a Parseval frame
built from the same pieces.
"""

from collections.abc import Sequence

import numpy as np
from numpy.typing import NDArray

from directional_cs.config.settings import get_settings
from directional_cs.config.standards import Cone
from directional_cs.filters.directional import DirectionalFilterSet
from directional_cs.filters.shears import digital_shear
from directional_cs.filters.wavelets import (
    WaveletPair,
    anisotropic_analysis,
    anisotropic_synthesis,
    isotropic_analysis,
    isotropic_synthesis,
)
from directional_cs.models.grid import ComplexGrid
from directional_cs.models.shear import ShearKey
from directional_cs.solvers.linear_map import LinearMap


def sparsifier_scale(grid_size: int, finest_scale: int) -> int:
    """Depth of W_J used by directional reconstructions on an N x N grid.

    The configured ``sparsifier_scale`` wins; otherwise log2(N) - 2. Never
    below J and never beyond what the axis-0 transform allows.
    """
    configured = get_settings().sparsifier_scale
    levels = grid_size.bit_length() - 1
    scale = configured if configured is not None else levels - 2
    return min(max(scale, finest_scale), levels)


def sheared_synthesis(
    coefficients: NDArray, key: ShearKey, finest_scale: int, pair: WaveletPair
) -> NDArray[np.complex128]:
    """S_s W_J^* c as an N x N grid; the vertical cone shears transposed coordinates."""
    image = np.asarray(anisotropic_synthesis(coefficients, finest_scale, pair), dtype=np.complex128)
    if key.cone == Cone.VERTICAL:
        return digital_shear(ComplexGrid(image.T), key.shear).data.T
    return digital_shear(ComplexGrid(image), key.shear).data


def sheared_analysis(
    image: NDArray, key: ShearKey, finest_scale: int, pair: WaveletPair
) -> NDArray[np.complex128]:
    """Adjoint (= inverse) of ``sheared_synthesis``."""
    data = np.asarray(image, dtype=np.complex128)
    if key.cone == Cone.VERTICAL:
        unsheared = digital_shear(ComplexGrid(data.T), key.shear, inverse=True).data.T
    else:
        unsheared = digital_shear(ComplexGrid(data), key.shear, inverse=True).data
    return np.asarray(anisotropic_analysis(unsheared, finest_scale, pair), dtype=np.complex128)


def _masked_fourier_map(
    synthesize,  # type: ignore[no-untyped-def]
    analyze,  # type: ignore[no-untyped-def]
    rows: NDArray[np.int64],
    cols: NDArray[np.int64],
    grid_size: int,
) -> LinearMap:
    def forward(c: NDArray) -> NDArray:
        image = synthesize(c.reshape(grid_size, grid_size))
        return np.fft.fft2(image)[rows, cols] / grid_size

    def adjoint(y: NDArray) -> NDArray:
        spectrum = np.zeros((grid_size, grid_size), dtype=np.complex128)
        spectrum[rows, cols] = y
        image = np.fft.ifft2(spectrum) * grid_size
        return analyze(image).ravel()

    return LinearMap(
        forward=forward,
        adjoint=adjoint,
        input_dim=grid_size * grid_size,
        output_dim=int(rows.size),
        row_orthonormal=True,
    )


def shear_operator(
    key: ShearKey,
    rows: NDArray[np.int64],
    cols: NDArray[np.int64],
    grid_size: int,
    finest_scale: int,
    pair: WaveletPair,
) -> LinearMap:
    """A_{J,s}: c -> F(S_s W_J^* c)[mask] / N."""
    return _masked_fourier_map(
        lambda c: sheared_synthesis(c, key, finest_scale, pair),
        lambda image: sheared_analysis(image, key, finest_scale, pair),
        rows,
        cols,
        grid_size,
    )


def wavelet_operator(
    rows: NDArray[np.int64],
    cols: NDArray[np.int64],
    grid_size: int,
    depth: int,
    pair: WaveletPair,
) -> LinearMap:
    """c -> F(Psi_J^* c)[mask] / N with the isotropic baseline transform."""
    return _masked_fourier_map(
        lambda c: np.asarray(isotropic_synthesis(c, depth, pair), dtype=np.complex128),
        lambda image: np.asarray(isotropic_analysis(image, depth, pair), dtype=np.complex128),
        rows,
        cols,
        grid_size,
    )


def fourier_operator(rows: NDArray[np.int64], cols: NDArray[np.int64], grid_size: int) -> LinearMap:
    """g -> F(g)[mask] / N acting directly on images."""
    return _masked_fourier_map(
        lambda g: np.asarray(g, dtype=np.complex128),
        lambda image: np.asarray(image, dtype=np.complex128),
        rows,
        cols,
        grid_size,
    )


def shearlet_frame(filters: DirectionalFilterSet, scale: int, pair: WaveletPair) -> LinearMap:
    """Parseval frame g -> (W_J S_s^{-1} (T_s * g))_s with T_s = G_s / sqrt(sum |G|^2).

    The analysis map is ``forward`` and the synthesis map is ``adjoint``;
    adjoint(forward(g)) = g because sum |T_s|^2 = 1 and every other factor is unitary.
    """
    size = filters.grid_size
    root = np.sqrt(filters.frame_sum())
    tight = [entry.spectrum.data / root for entry in filters]
    keys = filters.keys
    plane = size * size

    def forward(g: NDArray) -> NDArray:
        spectrum = np.fft.fft2(np.asarray(g).reshape(size, size))
        parts = [
            sheared_analysis(np.fft.ifft2(weight * spectrum), key, scale, pair).ravel()
            for key, weight in zip(keys, tight, strict=True)
        ]
        return np.concatenate(parts)

    def adjoint(coefficients: NDArray) -> NDArray:
        stacked = np.asarray(coefficients).reshape(len(keys), size, size)
        total = np.zeros((size, size), dtype=np.complex128)
        for key, weight, part in zip(keys, tight, stacked, strict=True):
            total += np.conj(weight) * np.fft.fft2(sheared_synthesis(part, key, scale, pair))
        return np.fft.ifft2(total).ravel()

    return LinearMap(
        forward=forward,
        adjoint=adjoint,
        input_dim=plane,
        output_dim=len(keys) * plane,
    )


def sheared_wavelet_atoms(
    key: ShearKey,
    grid_size: int,
    finest_scale: int,
    pair: WaveletPair,
    columns: Sequence[int] | None = None,
) -> NDArray[np.complex128]:
    """Spatial atoms S_s W_J^* e_lambda for the given flat coefficient indices, shape (L, N, N)."""
    indices = range(grid_size * grid_size) if columns is None else columns
    atoms = []
    for index in indices:
        unit = np.zeros(grid_size * grid_size)
        unit[index] = 1.0
        atoms.append(sheared_synthesis(unit.reshape(grid_size, grid_size), key, finest_scale, pair))
    return np.stack(atoms)
