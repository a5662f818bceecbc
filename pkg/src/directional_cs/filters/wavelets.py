"""Orthonormal wavelet pair and the periodized wavelet transforms.

Two transforms share the same ``WaveletPair``:

* the anisotropic transform W_J: separable, depth J along axis 0 and
  ceil(J/2) along axis 1 (parabolic scaling diag(2**j, 2**(j/2)));
* the isotropic transform used by the wavelet baselines: standard 2D
  pyramid of depth J.

Both use periodic extension, so they are orthonormal on power-of-two grids.
Coefficients are stored in place: along each transformed axis the layout is
[A_d | D_d | D_{d-1} | ... | D_1].
"""

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import pywt
from numpy.typing import NDArray

from directional_cs.config.settings import get_settings
from directional_cs.models.grid import RealGrid, require_square_power_of_two

_MODE = "periodization"


@dataclass(frozen=True)
class WaveletPair:
    """Low-pass and high-pass analysis taps of an orthonormal quadrature-mirror pair."""

    name: str
    lowpass: tuple[float, ...]
    highpass: tuple[float, ...]

    @classmethod
    def from_name(cls, name: str | None = None) -> "WaveletPair":
        """Resolve a PyWavelets orthogonal wavelet (defaults to the configured one).

        Raises:
            ValueError: If the wavelet is unknown or not orthogonal
        """
        wavelet_name = name or get_settings().wavelet
        try:
            wavelet = pywt.Wavelet(wavelet_name)
        except ValueError as e:
            raise ValueError(f"Unknown wavelet '{wavelet_name}': {e}") from e
        if not wavelet.orthogonal:
            raise ValueError(f"Wavelet '{wavelet_name}' is not orthogonal")
        return cls(
            name=wavelet_name,
            lowpass=tuple(float(tap) for tap in wavelet.dec_lo),
            highpass=tuple(float(tap) for tap in wavelet.dec_hi),
        )

    @property
    def tap_count(self) -> int:
        return len(self.lowpass)

    @cached_property
    def wavelet(self) -> pywt.Wavelet:
        return pywt.Wavelet(self.name)

    def orthonormality_error(self) -> float:
        """Max deviation of the double-shift inner products from delta_k (and 0 across)."""
        low = np.asarray(self.lowpass)
        high = np.asarray(self.highpass)
        taps = low.size
        worst = 0.0
        for shift in range(0, taps, 2):
            expected = 1.0 if shift == 0 else 0.0
            low_low = float(np.dot(low[: taps - shift], low[shift:]))
            high_high = float(np.dot(high[: taps - shift], high[shift:]))
            cross_a = float(np.dot(low[: taps - shift], high[shift:]))
            cross_b = float(np.dot(high[: taps - shift], low[shift:]))
            worst = max(
                worst,
                abs(low_low - expected),
                abs(high_high - expected),
                abs(cross_a),
                abs(cross_b),
            )
        return worst

    def perfect_reconstruction_error(self, samples: int = 256) -> float:
        """Max deviation of |H(w)|^2 + |H(w + pi)|^2 from 2 on a dense frequency grid."""
        response = np.fft.fft(np.asarray(self.lowpass), n=samples)
        power = np.abs(response) ** 2
        return float(np.max(np.abs(power + np.roll(power, samples // 2) - 2.0)))


@dataclass(frozen=True, eq=False)
class WaveletCoefficients:
    """In-place coefficient field of the anisotropic transform."""

    data: NDArray[np.float64] = field(repr=False)
    depths: tuple[int, int]
    wavelet: str

    @property
    def shape(self) -> tuple[int, int]:
        return self.data.shape[0], self.data.shape[1]

    def approximation(self) -> NDArray[np.float64]:
        """Coarsest approximation band (low-pass along both axes)."""
        rows = self.shape[0] >> self.depths[0]
        cols = self.shape[1] >> self.depths[1]
        return self.data[:rows, :cols]


def anisotropic_depths(finest_scale: int) -> tuple[int, int]:
    """Decomposition depths (axis 0, axis 1) of W_J."""
    return finest_scale, math.ceil(finest_scale / 2)


def _check_depth(size: int, depth: int) -> None:
    if depth < 0 or depth > size.bit_length() - 1:
        raise ValueError(f"Decomposition depth {depth} exceeds log2({size})")


def _analyze_axis(
    values: NDArray[np.float64], depth: int, axis: int, wavelet: pywt.Wavelet
) -> NDArray[np.float64]:
    current = values
    details: list[NDArray[np.float64]] = []
    for _ in range(depth):
        current, detail = pywt.dwt(current, wavelet, mode=_MODE, axis=axis)
        details.append(detail)
    return np.concatenate([current, *reversed(details)], axis=axis)


def _synthesize_axis(
    values: NDArray[np.float64], depth: int, axis: int, wavelet: pywt.Wavelet
) -> NDArray[np.float64]:
    size = values.shape[axis]
    coarse = size >> depth
    current = np.take(values, np.arange(coarse), axis=axis)
    start = coarse
    for _ in range(depth):
        detail = np.take(values, np.arange(start, 2 * start), axis=axis)
        current = pywt.idwt(current, detail, wavelet, mode=_MODE, axis=axis)
        start *= 2
    return current


def _complex_safe(transform, values: NDArray) -> NDArray:  # type: ignore[no-untyped-def]
    if np.iscomplexobj(values):
        return transform(values.real) + 1j * transform(values.imag)
    return transform(np.asarray(values, dtype=np.float64))


def anisotropic_analysis(
    values: NDArray, finest_scale: int, pair: WaveletPair
) -> NDArray:
    """Apply W_J to a (real or complex) square array."""
    size = require_square_power_of_two(values.shape, "wavelet input")
    depth0, depth1 = anisotropic_depths(finest_scale)
    _check_depth(size, depth0)
    _check_depth(size, depth1)

    def transform(part: NDArray[np.float64]) -> NDArray[np.float64]:
        stage = _analyze_axis(part, depth0, 0, pair.wavelet)
        return _analyze_axis(stage, depth1, 1, pair.wavelet)

    return _complex_safe(transform, values)


def anisotropic_synthesis(
    values: NDArray, finest_scale: int, pair: WaveletPair
) -> NDArray:
    """Apply W_J^* (= W_J^{-1}) to a (real or complex) coefficient array."""
    size = require_square_power_of_two(values.shape, "wavelet coefficients")
    depth0, depth1 = anisotropic_depths(finest_scale)
    _check_depth(size, depth0)
    _check_depth(size, depth1)

    def transform(part: NDArray[np.float64]) -> NDArray[np.float64]:
        stage = _synthesize_axis(part, depth1, 1, pair.wavelet)
        return _synthesize_axis(stage, depth0, 0, pair.wavelet)

    return _complex_safe(transform, values)


def awt_forward(u: RealGrid, finest_scale: int, pair: WaveletPair | None = None) -> WaveletCoefficients:
    """Anisotropic wavelet analysis of a real image.

    Raises:
        ValueError: If the grid is not square power-of-two or a depth exceeds log2(N)
    """
    pair = pair or WaveletPair.from_name()
    data = anisotropic_analysis(u.data, finest_scale, pair)
    return WaveletCoefficients(
        data=np.asarray(data, dtype=np.float64),
        depths=anisotropic_depths(finest_scale),
        wavelet=pair.name,
    )


def awt_inverse(coefficients: WaveletCoefficients) -> RealGrid:
    """Anisotropic wavelet synthesis; exact inverse of ``awt_forward``."""
    pair = WaveletPair.from_name(coefficients.wavelet)
    finest_scale = coefficients.depths[0]
    return RealGrid(anisotropic_synthesis(coefficients.data, finest_scale, pair))


def isotropic_analysis(values: NDArray, depth: int, pair: WaveletPair) -> NDArray:
    """Standard 2D periodized pyramid of the given depth (Mallat layout)."""
    size = require_square_power_of_two(values.shape, "wavelet input")
    _check_depth(size, depth)

    def transform(part: NDArray[np.float64]) -> NDArray[np.float64]:
        out = part.copy()
        block = size
        for _ in range(depth):
            approx, (horizontal, vertical, diagonal) = pywt.dwt2(
                out[:block, :block], pair.wavelet, mode=_MODE
            )
            half = block // 2
            out[:half, :half] = approx
            out[:half, half:block] = horizontal
            out[half:block, :half] = vertical
            out[half:block, half:block] = diagonal
            block = half
        return out

    return _complex_safe(transform, values)


def isotropic_synthesis(values: NDArray, depth: int, pair: WaveletPair) -> NDArray:
    """Inverse of ``isotropic_analysis``."""
    size = require_square_power_of_two(values.shape, "wavelet coefficients")
    _check_depth(size, depth)

    def transform(part: NDArray[np.float64]) -> NDArray[np.float64]:
        out = part.copy()
        block = size >> depth
        for _ in range(depth):
            full = block * 2
            coeffs = (
                out[:block, :block],
                (out[:block, block:full], out[block:full, :block], out[block:full, block:full]),
            )
            out[:full, :full] = pywt.idwt2(coeffs, pair.wavelet, mode=_MODE)
            block = full
        return out

    return _complex_safe(transform, values)
