"""Tests for measurements, per-shear operators and reconstructions."""

import logging
from pathlib import Path

import numpy as np
import pytest

from directional_cs.config.standards import PhantomKind, SchemeKind
from directional_cs.filters.directional import DirectionalFilterSet, build_directional_filters
from directional_cs.filters.wavelets import WaveletPair
from directional_cs.models.grid import ComplexGrid, RealGrid
from directional_cs.models.mask import MaskEntry, SamplingMask
from directional_cs.models.solver import SolverOptions
from directional_cs.phantoms.render import default_spec, render
from directional_cs.pipeline.measurement import (
    MeasurementSet,
    PipelineError,
    forward_measure,
    read_measurements,
    write_measurements,
)
from directional_cs.pipeline.operators import (
    fourier_operator,
    shear_operator,
    shearlet_frame,
    sheared_analysis,
    sheared_synthesis,
    sparsifier_scale,
    wavelet_operator,
)
from directional_cs.pipeline.reconstruct import (
    combine_shears,
    reconstruct_directional,
    reconstruct_shearlet,
    reconstruct_wavelet,
    reconstruction_options,
    shear_residuals,
)
from directional_cs.sampling.masks import baseline_radial_mask, draw_mask

SIZE = 32
SCALE = 3


@pytest.fixture(scope="module")
def pair() -> WaveletPair:
    return WaveletPair.from_name("db4")


@pytest.fixture(scope="module")
def filters() -> DirectionalFilterSet:
    return build_directional_filters(SIZE, 2)


@pytest.fixture
def disk() -> RealGrid:
    return render(default_spec(PhantomKind.DISK, SIZE))


class TestForwardMeasure:
    """Tests for forward_measure and measurement files."""

    def test_full_mask_keeps_spectrum(self, disk: RealGrid) -> None:
        measurements = forward_measure(disk, baseline_radial_mask(SIZE, 1.0))

        recovered = np.fft.ifft2(measurements.samples.data).real

        assert np.max(np.abs(recovered - disk.data)) <= 1e-12

    def test_empty_mask_gives_zero(self, disk: RealGrid) -> None:
        mask = SamplingMask(grid_size=SIZE, entries=[MaskEntry()])

        measurements = forward_measure(disk, mask)

        assert measurements.is_zero

    def test_nonzero_count_matches_mask(self, rng: np.random.Generator) -> None:
        mask = draw_mask(2, 64, ratio=0.05, seed=3)

        measurements = forward_measure(RealGrid(rng.random((64, 64))), mask)

        assert np.count_nonzero(measurements.samples.data) == mask.cardinality
        assert measurements.sidecar()["nonzero"] == mask.cardinality

    def test_size_mismatch_rejected(self, disk: RealGrid) -> None:
        with pytest.raises(PipelineError) as excinfo:
            forward_measure(disk, baseline_radial_mask(16, 0.5))

        assert excinfo.value.expected == 16
        assert excinfo.value.actual == SIZE

    def test_samples_off_mask_rejected(self) -> None:
        mask = SamplingMask(grid_size=8, entries=[MaskEntry(points=[(0, 0)])])

        with pytest.raises(PipelineError, match="vanish"):
            MeasurementSet(grid_size=8, mask=mask, samples=ComplexGrid(np.ones((8, 8))))

    def test_file_round_trip(self, tmp_path: Path, disk: RealGrid) -> None:
        measurements = forward_measure(disk, draw_mask(2, SIZE, 20, seed=1))

        write_measurements(measurements, tmp_path / "m.cifg", tmp_path / "m.json")
        loaded = read_measurements(tmp_path / "m.cifg", tmp_path / "m.json")

        assert np.array_equal(loaded.samples.data, measurements.samples.data)
        assert loaded.mask.union_points() == measurements.mask.union_points()


class TestOperators:
    """Tests for the per-shear measurement operators."""

    def test_sheared_analysis_inverts_synthesis(
        self, rng: np.random.Generator, filters: DirectionalFilterSet, pair: WaveletPair
    ) -> None:
        coefficients = rng.standard_normal((SIZE, SIZE))

        for key in filters.keys:
            image = sheared_synthesis(coefficients, key, 2, pair)
            back = sheared_analysis(image, key, 2, pair)
            assert np.max(np.abs(back - coefficients)) <= 1e-10

    def test_shear_operator_is_row_orthonormal(
        self, rng: np.random.Generator, filters: DirectionalFilterSet, pair: WaveletPair
    ) -> None:
        mask = draw_mask(2, SIZE, 40, seed=2)
        measurements = forward_measure(RealGrid(rng.random((SIZE, SIZE))), mask)
        rows, cols = measurements.selection()

        for key in filters.keys:
            operator = shear_operator(key, rows, cols, SIZE, 2, pair)
            y = rng.standard_normal(rows.size) + 1j * rng.standard_normal(rows.size)
            assert operator.row_orthonormal
            assert np.max(np.abs(operator.forward(operator.adjoint(y)) - y)) <= 1e-10
            assert operator.adjoint_mismatch(rng) <= 1e-10

    def test_wavelet_operator_adjoint(self, rng: np.random.Generator, pair: WaveletPair) -> None:
        mask = baseline_radial_mask(SIZE, 0.3, seed=1)
        rows, cols = forward_measure(RealGrid(rng.random((SIZE, SIZE))), mask).selection()

        operator = wavelet_operator(rows, cols, SIZE, 2, pair)

        assert operator.adjoint_mismatch(rng) <= 1e-10


class TestReconstructDirectional:
    """Tests for reconstruct_directional."""

    def test_full_mask_is_exact(
        self, disk: RealGrid, filters: DirectionalFilterSet, pair: WaveletPair
    ) -> None:
        measurements = forward_measure(disk, draw_mask(2, SIZE, ratio=1.0, seed=0))

        estimate, report = reconstruct_directional(measurements, filters, pair=pair, ground_truth=disk)

        assert report.psnr_db is not None and report.psnr_db >= 60.0
        assert report.scheme == "shear06"
        assert len(report.solves) == 6
        assert not report.degraded
        assert estimate.shape == disk.shape

    def test_zero_measurements_give_zero(
        self, filters: DirectionalFilterSet, pair: WaveletPair
    ) -> None:
        measurements = forward_measure(RealGrid.zeros(SIZE, SIZE), draw_mask(2, SIZE, 30, seed=0))

        estimate, report = reconstruct_directional(measurements, filters, pair=pair)

        assert np.all(estimate.data == 0)
        assert report.trivial
        assert all(solve.report.termination == "trivial" for solve in report.solves)
        assert "psnr_db" not in report.to_dict()

    def test_true_coefficients_have_zero_residual(
        self, disk: RealGrid, filters: DirectionalFilterSet, pair: WaveletPair
    ) -> None:
        measurements = forward_measure(disk, draw_mask(2, SIZE, ratio=0.3, seed=4))
        coefficients = {
            entry.key: sheared_analysis(part.data, entry.key, SCALE, pair).ravel()
            for entry, part in zip(filters, filters.analyze(disk), strict=True)
        }

        residuals = shear_residuals(measurements, filters, coefficients, pair)

        assert sorted(residuals) == sorted(key.label() for key in filters.keys)
        assert max(residuals.values()) <= 1e-9

    def test_threads_do_not_change_estimate(
        self, disk: RealGrid, filters: DirectionalFilterSet, pair: WaveletPair
    ) -> None:
        measurements = forward_measure(disk, draw_mask(2, SIZE, ratio=0.3, seed=5))
        options = SolverOptions(max_iterations=50, relative_tolerance=1e-6)

        serial, _ = reconstruct_directional(measurements, filters, options, pair=pair, threads=1)
        threaded, _ = reconstruct_directional(measurements, filters, options, pair=pair, threads=3)

        assert np.array_equal(serial.data, threaded.data)

    def test_unconverged_shears_are_flagged(
        self,
        disk: RealGrid,
        filters: DirectionalFilterSet,
        pair: WaveletPair,
        caplog: pytest.LogCaptureFixture,
    ) -> None:
        measurements = forward_measure(disk, draw_mask(2, SIZE, ratio=0.2, seed=6))

        with caplog.at_level(logging.WARNING):
            estimate, report = reconstruct_directional(
                measurements, filters, SolverOptions(max_iterations=1), pair=pair
            )

        assert report.degraded
        assert report.to_dict()["converged_shears"] < 6
        assert "keeping their last iterates" in caplog.text
        assert np.linalg.norm(estimate.data) > 0

    def test_filter_size_mismatch(self, filters: DirectionalFilterSet, pair: WaveletPair) -> None:
        measurements = forward_measure(RealGrid.zeros(64, 64), baseline_radial_mask(64, 0.1))

        with pytest.raises(PipelineError, match="Filters built"):
            reconstruct_directional(measurements, filters, pair=pair)


class TestCombineShears:
    """Tests for the dual-filter combination."""

    def test_linear(
        self, rng: np.random.Generator, filters: DirectionalFilterSet, pair: WaveletPair
    ) -> None:
        first = {key: rng.standard_normal(SIZE * SIZE) for key in filters.keys}
        second = {key: rng.standard_normal(SIZE * SIZE) for key in filters.keys}
        summed = {key: first[key] + second[key] for key in filters.keys}

        separate = combine_shears(filters, first, pair).data + combine_shears(filters, second, pair).data

        assert np.max(np.abs(combine_shears(filters, summed, pair).data - separate)) <= 1e-10

    def test_analysis_coefficients_recombine_to_image(
        self, disk: RealGrid, filters: DirectionalFilterSet, pair: WaveletPair
    ) -> None:
        parts = filters.analyze(disk)
        coefficients = {
            entry.key: sheared_analysis(part.data, entry.key, SCALE, pair).ravel()
            for entry, part in zip(filters, parts, strict=True)
        }

        combined = combine_shears(filters, coefficients, pair)

        assert np.max(np.abs(combined.data - disk.data)) <= 1e-8

    def test_missing_keys_contribute_nothing(
        self, filters: DirectionalFilterSet, pair: WaveletPair
    ) -> None:
        assert np.all(combine_shears(filters, {}, pair).data == 0)


class TestReconstructWavelet:
    """Tests for the wavelet baseline."""

    def test_full_mask_is_exact(self, disk: RealGrid, pair: WaveletPair) -> None:
        measurements = forward_measure(disk, baseline_radial_mask(SIZE, 1.0))

        _, report = reconstruct_wavelet(measurements, pair=pair, ground_truth=disk, depth=2)

        assert report.psnr_db is not None and report.psnr_db >= 60.0
        assert report.scheme == "wave01"
        assert len(report.solves) == 1

    def test_scheme_is_recorded(self, disk: RealGrid, pair: WaveletPair) -> None:
        measurements = forward_measure(disk, draw_mask(2, SIZE, ratio=0.3, seed=0))

        _, report = reconstruct_wavelet(
            measurements,
            SolverOptions(max_iterations=20),
            scheme=SchemeKind.WAVELET_DIRECTIONAL,
            pair=pair,
        )

        assert report.scheme == "wave02"

    def test_empty_mask_gives_zero(self, pair: WaveletPair, disk: RealGrid) -> None:
        mask = SamplingMask(grid_size=SIZE, entries=[MaskEntry()])

        estimate, report = reconstruct_wavelet(forward_measure(disk, mask), pair=pair)

        assert np.all(estimate.data == 0)
        assert report.trivial


class TestSparsifierScale:
    """Tests for the depth of W_J in reconstructions."""

    @pytest.mark.parametrize(
        ("size", "finest_scale", "expected"), [(32, 2, 3), (256, 2, 6), (256, 4, 6), (16, 4, 4)]
    )
    def test_default_depth(self, size: int, finest_scale: int, expected: int) -> None:
        assert sparsifier_scale(size, finest_scale) == expected

    def test_configured_depth(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("DIRCS_SPARSIFIER_SCALE", "5")

        assert sparsifier_scale(256, 2) == 5
        assert sparsifier_scale(256, 6) == 6
        assert sparsifier_scale(16, 2) == 4


class TestNestedMasks:
    """More samples under the same seed never lose information."""

    def test_larger_mask_extends_measurements(self, disk: RealGrid) -> None:
        small = forward_measure(disk, draw_mask(2, SIZE, 20, seed=7))
        large = forward_measure(disk, draw_mask(2, SIZE, 60, seed=7))
        rows, cols = small.selection()

        assert set(small.mask.union_points()) <= set(large.mask.union_points())
        assert np.array_equal(large.samples.data[rows, cols], small.samples.data[rows, cols])

    def test_zero_filled_error_does_not_increase(self, disk: RealGrid) -> None:
        errors = []
        for count in (10, 40, 160, SIZE * SIZE):
            measurements = forward_measure(disk, draw_mask(2, SIZE, count, seed=8))
            zero_filled = np.fft.ifft2(measurements.samples.data).real
            errors.append(float(np.linalg.norm(zero_filled - disk.data)))

        assert all(later <= earlier + 1e-12 for earlier, later in zip(errors, errors[1:], strict=False))
        assert errors[-1] <= 1e-12

    def test_full_mask_beats_every_subsampled_reconstruction(
        self, disk: RealGrid, filters: DirectionalFilterSet, pair: WaveletPair
    ) -> None:
        options = SolverOptions(max_iterations=60, relative_tolerance=1e-6)
        errors = []
        for ratio in (0.2, 0.5, 1.0):
            measurements = forward_measure(disk, draw_mask(2, SIZE, ratio=ratio, seed=9))
            estimate, _ = reconstruct_directional(measurements, filters, options, pair=pair)
            errors.append(float(np.linalg.norm(estimate.data - disk.data)))

        assert errors[-1] <= 1e-8
        assert errors[-1] <= min(errors[:-1])


class TestShearletBaseline:
    """Tests for the Parseval shearlet frame and the analysis-l1 baseline."""

    def test_frame_is_parseval(
        self, rng: np.random.Generator, filters: DirectionalFilterSet, pair: WaveletPair
    ) -> None:
        frame = shearlet_frame(filters, SCALE, pair)
        g = rng.standard_normal(SIZE * SIZE)

        coefficients = frame.forward(g)

        assert coefficients.size == len(filters) * SIZE * SIZE
        assert np.max(np.abs(frame.adjoint(coefficients) - g)) <= 1e-10
        assert np.linalg.norm(coefficients) == pytest.approx(np.linalg.norm(g), rel=1e-10)
        assert frame.adjoint_mismatch(rng) <= 1e-10

    def test_fourier_operator_is_row_orthonormal(self, rng: np.random.Generator) -> None:
        mask = draw_mask(2, SIZE, 30, seed=3)
        rows, cols = forward_measure(RealGrid(rng.random((SIZE, SIZE))), mask).selection()
        operator = fourier_operator(rows, cols, SIZE)
        y = rng.standard_normal(rows.size) + 1j * rng.standard_normal(rows.size)

        assert np.max(np.abs(operator.forward(operator.adjoint(y)) - y)) <= 1e-10

    def test_full_mask_is_exact(
        self, disk: RealGrid, filters: DirectionalFilterSet, pair: WaveletPair
    ) -> None:
        measurements = forward_measure(disk, draw_mask(2, SIZE, ratio=1.0, seed=0))

        _, report = reconstruct_shearlet(measurements, filters, pair=pair, ground_truth=disk)

        assert report.psnr_db is not None and report.psnr_db >= 60.0
        assert report.scheme == "shear"
        assert len(report.solves) == 1

    def test_estimate_stays_feasible(
        self, disk: RealGrid, filters: DirectionalFilterSet, pair: WaveletPair
    ) -> None:
        measurements = forward_measure(disk, draw_mask(2, SIZE, ratio=0.3, seed=2))

        _, report = reconstruct_shearlet(
            measurements, filters, SolverOptions(max_iterations=40), pair=pair
        )

        assert report.solves[0].report.residual <= 1e-8 * np.linalg.norm(measurements.samples.data)
        assert report.solves[0].report.iterations == 40 or report.solves[0].report.converged

    def test_zero_measurements_give_zero(
        self, filters: DirectionalFilterSet, pair: WaveletPair
    ) -> None:
        measurements = forward_measure(RealGrid.zeros(SIZE, SIZE), draw_mask(2, SIZE, 30, seed=0))

        estimate, report = reconstruct_shearlet(measurements, filters, pair=pair)

        assert np.all(estimate.data == 0)
        assert report.solves[0].report.termination == "trivial"

    def test_unconverged_keeps_iterate(
        self,
        disk: RealGrid,
        filters: DirectionalFilterSet,
        pair: WaveletPair,
        caplog: pytest.LogCaptureFixture,
    ) -> None:
        measurements = forward_measure(disk, draw_mask(2, SIZE, ratio=0.3, seed=2))

        with caplog.at_level(logging.WARNING):
            estimate, report = reconstruct_shearlet(
                measurements, filters, SolverOptions(max_iterations=1), pair=pair
            )

        assert report.degraded
        assert "keeping its last iterate" in caplog.text
        assert np.linalg.norm(estimate.data) > 0


class TestReconstructionOptions:
    """Tests for image-scale solver defaults."""

    def test_defaults(self) -> None:
        options = reconstruction_options()

        assert options.max_iterations == 500
        assert options.relative_tolerance == 1e-4

    def test_env_override(self, monkeypatch: pytest.MonkeyPatch) -> None:
        monkeypatch.setenv("DIRCS_RECONSTRUCTION_MAX_ITERATIONS", "25")

        assert reconstruction_options().max_iterations == 25
