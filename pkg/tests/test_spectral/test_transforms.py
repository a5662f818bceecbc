"""Tests for the DFT, circular convolution and PSNR."""

import math

import numpy as np
import pytest

from directional_cs.models.grid import ComplexGrid, RealGrid, SpectralError
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


def _spatial_convolution(u: np.ndarray, h: np.ndarray) -> np.ndarray:
    rows, cols = u.shape
    out = np.zeros_like(u)
    for i in range(rows):
        for j in range(cols):
            for k in range(rows):
                for m in range(cols):
                    out[i, j] += u[k, m] * h[(i - k) % rows, (j - m) % cols]
    return out


class TestCenteredFrequencies:
    """Tests for the centered frequency map."""

    def test_even_size_layout(self) -> None:
        assert centered_frequencies(8).tolist() == [0, 1, 2, 3, -4, -3, -2, -1]

    def test_storage_index_inverts_centered_map(self) -> None:
        freqs = centered_frequencies(16)
        for index, frequency in enumerate(freqs):
            assert storage_index(int(frequency), 16) == index

    def test_mesh_orientation(self) -> None:
        n1, n2 = frequency_mesh(8)

        assert n1[1, 0] == 1 and n2[1, 0] == 0
        assert n1[0, 7] == 0 and n2[0, 7] == -1


class TestDft2:
    """Tests for dft2 / idft2."""

    def test_constant_grid_concentrates_at_dc(self) -> None:
        spectrum = dft2(RealGrid(np.ones((4, 4))))

        assert spectrum.data[0, 0] == pytest.approx(16.0)
        assert np.allclose(np.delete(spectrum.data.ravel(), 0), 0.0)

    def test_unit_impulse_has_flat_spectrum(self) -> None:
        impulse = np.zeros((8, 8))
        impulse[0, 0] = 1.0

        assert np.allclose(dft2(RealGrid(impulse)).data, 1.0)

    def test_dc_impulse_inverts_to_constant(self) -> None:
        spectrum = np.zeros((8, 8), dtype=complex)
        spectrum[0, 0] = 1.0

        assert np.allclose(idft2(ComplexGrid(spectrum)).data, 1.0 / 64)

    def test_round_trip(self, rng: np.random.Generator) -> None:
        u = RealGrid(rng.standard_normal((16, 16)))

        error = np.max(np.abs(idft2(dft2(u)).data - u.data))

        assert error <= 1e-12

    def test_plancherel(self, rng: np.random.Generator) -> None:
        u = rng.standard_normal((128, 128))

        energy = np.sum(np.abs(dft2(RealGrid(u)).data) ** 2) / u.size

        assert energy == pytest.approx(np.sum(u**2), rel=1e-10)

    def test_non_finite_input_is_rejected(self) -> None:
        data = np.zeros((4, 4))
        data[1, 2] = np.nan

        with pytest.raises(SpectralError) as excinfo:
            RealGrid(data)

        assert excinfo.value.count == 1


class TestCircConv:
    """Tests for circ_conv."""

    def test_impulse_is_identity(self, rng: np.random.Generator) -> None:
        u = RealGrid(rng.random((8, 8)))
        delta = np.zeros((8, 8))
        delta[0, 0] = 1.0

        assert np.allclose(circ_conv(u, RealGrid(delta)).data, u.data, atol=1e-12)

    def test_shifted_impulse_shifts_rows(self, rng: np.random.Generator) -> None:
        u = RealGrid(rng.random((8, 8)))
        delta = np.zeros((8, 8))
        delta[1, 0] = 1.0

        assert np.allclose(circ_conv(u, RealGrid(delta)).data, np.roll(u.data, 1, axis=0))

    def test_matches_spatial_sum(self, rng: np.random.Generator) -> None:
        u, h = rng.random((8, 8)), rng.random((8, 8))

        fast = circ_conv(RealGrid(u), RealGrid(h)).data

        assert np.max(np.abs(fast - _spatial_convolution(u, h))) <= 1e-10

    def test_commutative(self, rng: np.random.Generator) -> None:
        u, h = RealGrid(rng.random((8, 8))), RealGrid(rng.random((8, 8)))

        assert np.allclose(circ_conv(u, h).data, circ_conv(h, u).data)

    def test_shape_mismatch_raises(self) -> None:
        with pytest.raises(ValueError, match="share a shape"):
            circ_conv(RealGrid.zeros(4, 4), RealGrid.zeros(8, 8))

    def test_filter_in_frequency_matches_circ_conv(self, rng: np.random.Generator) -> None:
        u, h = RealGrid(rng.random((8, 8))), rng.random((8, 8))

        filtered = filter_in_frequency(u, np.fft.fft2(h))

        assert np.allclose(filtered.data.real, circ_conv(u, RealGrid(h)).data)


class TestPsnr:
    """Tests for psnr."""

    def test_identical_grids_give_infinity(self) -> None:
        u = RealGrid(np.full((4, 4), 0.3))

        assert psnr(u, u) == math.inf

    def test_constant_offset(self) -> None:
        u = RealGrid(np.full((4, 4), 0.5))
        v = RealGrid(np.full((4, 4), 0.5 + 1 / 255))

        assert psnr(u, v) == pytest.approx(20 * math.log10(255), abs=1e-9)

    def test_reference_mse(self) -> None:
        u = RealGrid(np.zeros((2, 2)))
        v = RealGrid(np.full((2, 2), 0.5))

        assert mse(u, v) == pytest.approx(0.25)
        assert psnr(u, v) == pytest.approx(6.0206, abs=1e-4)

    def test_symmetric(self, rng: np.random.Generator) -> None:
        u, v = RealGrid(rng.random((8, 8))), RealGrid(rng.random((8, 8)))

        assert psnr(u, v) == pytest.approx(psnr(v, u))

    def test_non_positive_peak_raises(self) -> None:
        with pytest.raises(ValueError, match="peak"):
            psnr(RealGrid.zeros(2, 2), RealGrid.zeros(2, 2), peak=0.0)
