"""Digital directional filters G_s and their closed-form duals.

The unsheared filter is

    F(G_0) = |Phi|^2 + sum_j |Psi_j|^2 * D,

where D is a smooth wedge around the xi1 axis: 1 for |xi2 / xi1| <= 2**(-J/2),
0 from twice that slope. Horizontal-cone filters are F(S_s G_0) for every s in
the shear set; vertical-cone filters are their transposes. Duals are

    F(G~_s) = conj(F(G_s)) / sum_{s'} |F(G_s')|^2,

so sum_s G~_s * G_s * u = u for every grid u.
"""

import logging
from collections.abc import Iterator
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from directional_cs.config.standards import FRAME_BOUND_FLOOR, Cone
from directional_cs.filters.shears import digital_shear, shear_keys
from directional_cs.filters.windows import build_scale_windows, lowpass_profile
from directional_cs.models.grid import ComplexGrid, Grid, RealGrid
from directional_cs.models.shear import ShearKey
from directional_cs.spectral.transforms import centered_frequencies, frequency_mesh

logger = logging.getLogger(__name__)


class FilterBankError(Exception):
    """Raised when a directional filter bank cannot be built."""

    def __init__(self, message: str, frequency: tuple[int, int] | None = None):
        super().__init__(message)
        self.frequency = frequency


@dataclass(frozen=True, eq=False)
class DirectionalFilter:
    """One entry of a filter set: its key, spectrum and dual spectrum."""

    key: ShearKey
    spectrum: ComplexGrid = field(repr=False)
    dual: ComplexGrid = field(repr=False)


@dataclass(frozen=True, eq=False)
class DirectionalFilterSet:
    """Spectra F(G_s) and duals F(G~_s) for all shears of both cones."""

    grid_size: int
    finest_scale: int
    filters: tuple[DirectionalFilter, ...]
    lower_bound: float
    lower_bound_frequency: tuple[int, int]

    def __iter__(self) -> Iterator[DirectionalFilter]:
        return iter(self.filters)

    def __len__(self) -> int:
        return len(self.filters)

    @property
    def keys(self) -> list[ShearKey]:
        return [entry.key for entry in self.filters]

    def get(self, key: ShearKey) -> DirectionalFilter:
        """Look up the filter for a (shear, cone) pair.

        Raises:
            KeyError: If the key is not part of this set
        """
        for entry in self.filters:
            if entry.key == key:
                return entry
        raise KeyError(f"No filter for {key.label()} in the J={self.finest_scale} set")

    def frame_sum(self) -> NDArray[np.float64]:
        """sum over all entries of |F(G_s)|^2."""
        return frame_sum([entry.spectrum for entry in self.filters])

    def analyze(self, u: Grid) -> list[ComplexGrid]:
        """G_s * u for every entry, in set order."""
        spectrum = np.fft.fft2(u.data)
        return [ComplexGrid(np.fft.ifft2(spectrum * entry.spectrum.data)) for entry in self.filters]

    def synthesize(self, parts: list[ComplexGrid]) -> ComplexGrid:
        """sum_s G~_s * parts[s], summed in set order."""
        if len(parts) != len(self.filters):
            raise ValueError(f"Expected {len(self.filters)} parts, got {len(parts)}")
        total = np.zeros((self.grid_size, self.grid_size), dtype=np.complex128)
        for entry, part in zip(self.filters, parts, strict=True):
            total += entry.dual.data * np.fft.fft2(part.data)
        return ComplexGrid(np.fft.ifft2(total))

    def reconstruct(self, u: RealGrid) -> RealGrid:
        """sum_s G~_s * G_s * u; equals u up to rounding."""
        return self.synthesize(self.analyze(u)).real_part()

    def manifest(self) -> dict:
        """JSON description {N, J, shears, C_low}."""
        return {
            "N": self.grid_size,
            "J": self.finest_scale,
            "shears": [entry.key.to_dict() for entry in self.filters],
            "C_low": self.lower_bound,
            "C_low_frequency": list(self.lower_bound_frequency),
        }


def frame_sum(spectra: list[ComplexGrid]) -> NDArray[np.float64]:
    """Pointwise sum of |spectrum|^2, accumulated in list order."""
    total = np.zeros(spectra[0].shape)
    for spectrum in spectra:
        total += np.abs(spectrum.data) ** 2
    return total


def dual_spectra(spectra: list[ComplexGrid]) -> list[ComplexGrid]:
    """Closed-form duals conj(F(G_s)) / sum |F(G_s')|^2."""
    denominator = frame_sum(spectra)
    return [ComplexGrid(np.conj(spectrum.data) / denominator) for spectrum in spectra]


def directional_weight(grid_size: int, finest_scale: int) -> NDArray[np.float64]:
    """Smooth wedge D around the xi1 axis with slope half-width 2**(-J/2)."""
    n1, n2 = frequency_mesh(grid_size)
    weight = np.zeros((grid_size, grid_size))
    off_axis = n1 != 0
    slope = np.abs(n2[off_axis] / n1[off_axis])
    weight[off_axis] = lowpass_profile(slope, 2.0 ** (-finest_scale / 2))
    return weight


def base_filter_spectrum(grid_size: int, finest_scale: int) -> ComplexGrid:
    """F(G_0) = |Phi|^2 + sum_j |Psi_j|^2 * D."""
    windows = build_scale_windows(grid_size, finest_scale)
    wedge = directional_weight(grid_size, finest_scale)
    spectrum = np.abs(windows.scaling.data) ** 2 + windows.detail_energy() * wedge
    return ComplexGrid(spectrum)


def sheared_spectrum(base: ComplexGrid, key: ShearKey) -> ComplexGrid:
    """F(S_s G_0), transposed for the vertical cone."""
    if key.shear.q == 0:
        spectrum = base.data
    else:
        spatial = ComplexGrid(np.fft.ifft2(base.data))
        spectrum = np.fft.fft2(digital_shear(spatial, key.shear).data)
    if key.cone == Cone.VERTICAL:
        spectrum = spectrum.T
    return ComplexGrid(spectrum)


def build_directional_filters(grid_size: int, finest_scale: int) -> DirectionalFilterSet:
    """Build the directional filter set for an N x N grid up to scale J.

    Args:
        grid_size: Grid side N (power of two, at least 4 * 2**J)
        finest_scale: Even finest scale J

    Returns:
        DirectionalFilterSet with spectra, duals and the lower frame bound

    Raises:
        ValueError: If (N, J) is invalid
        FilterBankError: If the lower frame bound degenerates
    """
    keys = shear_keys(finest_scale)
    base = base_filter_spectrum(grid_size, finest_scale)
    spectra = [sheared_spectrum(base, key) for key in keys]

    total = frame_sum(spectra)
    flat_index = int(np.argmin(total))
    row, col = np.unravel_index(flat_index, total.shape)
    freqs = centered_frequencies(grid_size)
    frequency = (int(freqs[row]), int(freqs[col]))
    lower_bound = float(total[row, col])
    if lower_bound <= FRAME_BOUND_FLOOR:
        raise FilterBankError(
            f"Lower frame bound {lower_bound:.3e} at frequency {frequency} is degenerate "
            f"for N={grid_size}, J={finest_scale}",
            frequency=frequency,
        )

    duals = dual_spectra(spectra)
    logger.info(
        "Built %d directional filters for N=%d, J=%d (C_low=%.4g at %s)",
        len(spectra),
        grid_size,
        finest_scale,
        lower_bound,
        frequency,
    )
    filters = tuple(
        DirectionalFilter(key=key, spectrum=spectrum, dual=dual)
        for key, spectrum, dual in zip(keys, spectra, duals, strict=True)
    )
    return DirectionalFilterSet(
        grid_size=grid_size,
        finest_scale=finest_scale,
        filters=filters,
        lower_bound=lower_bound,
        lower_bound_frequency=frequency,
    )
