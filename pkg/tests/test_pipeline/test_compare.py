"""Tests for the comparison harness."""

import math

import pytest

from directional_cs.config.standards import PhantomKind
from directional_cs.models.reports import RunConfig
from directional_cs.models.solver import SolverOptions
from directional_cs.phantoms.render import default_spec, render
from directional_cs.pipeline.compare import compare, comparison_csv, comparison_json, scheme_mask

FAST = SolverOptions(max_iterations=30, relative_tolerance=1e-4)


@pytest.fixture(scope="module")
def small_rows():
    u = render(default_spec(PhantomKind.DISK, 32))
    return compare(u, ["shear06", "wave01", "wave02"], [0.3], [0, 1], FAST, baseline_scale=2)


class TestSchemeMask:
    """Tests for per-scheme masks."""

    def test_radial_baseline_has_single_entry(self) -> None:
        mask = scheme_mask("wave01", 32, 0.2, 0)

        assert len(mask.entries) == 1

    def test_directional_scale_from_id(self) -> None:
        assert scheme_mask("shear06", 32, 0.2, 0).finest_scale == 2
        assert scheme_mask("shear14", 64, 0.2, 0).finest_scale == 4

    def test_wave02_uses_baseline_scale(self) -> None:
        assert scheme_mask("wave02", 32, 0.2, 0, baseline_scale=2).finest_scale == 2

    def test_shear_baseline_uses_directional_mask(self) -> None:
        baseline = scheme_mask("shear", 32, 0.2, 0, baseline_scale=2)

        assert baseline.union_points() == scheme_mask("shear06", 32, 0.2, 0).union_points()

    @pytest.mark.parametrize("scheme_id", ["curvelet", "shear02", "shear04", "wave03"])
    def test_unknown_scheme(self, scheme_id: str) -> None:
        with pytest.raises(ValueError, match="Unknown scheme"):
            scheme_mask(scheme_id, 32, 0.2, 0)


class TestCompare:
    """Tests for compare."""

    def test_row_order(self, small_rows) -> None:
        assert [(row.scheme, row.seed) for row in small_rows] == [
            ("shear06", 0),
            ("shear06", 1),
            ("wave01", 0),
            ("wave01", 1),
            ("wave02", 0),
            ("wave02", 1),
        ]

    def test_rows_carry_psnr_and_shear_counts(self, small_rows) -> None:
        for row in small_rows:
            assert math.isfinite(row.psnr_db)
            assert row.ratio == 0.3
        assert small_rows[0].total_shears == 6
        assert small_rows[2].total_shears == 1

    def test_empty_lists_rejected(self) -> None:
        u = render(default_spec(PhantomKind.DISK, 32))

        with pytest.raises(ValueError, match="at least one"):
            compare(u, [], [0.1], [0])

    def test_unknown_scheme_rejected_before_work(self) -> None:
        u = render(default_spec(PhantomKind.DISK, 32))

        with pytest.raises(ValueError):
            compare(u, ["shear06", "bogus"], [0.1], [0])

    def test_shear_baseline_row(self) -> None:
        u = render(default_spec(PhantomKind.DISK, 32))

        rows = compare(u, ["shear"], [0.3], [0], FAST, baseline_scale=2)

        assert rows[0].scheme == "shear"
        assert rows[0].total_shears == 1
        assert math.isfinite(rows[0].psnr_db)

    def test_full_sampling_is_exact_for_every_scheme(self) -> None:
        u = render(default_spec(PhantomKind.DISK, 32))

        rows = compare(u, ["shear06", "shear", "wave01", "wave02"], [1.0], [0], FAST, baseline_scale=2)

        for row in rows:
            assert row.psnr_db >= 60.0, row.scheme


class TestComparisonOutput:
    """Tests for the CSV and JSON tables."""

    def test_csv_header_and_comments(self, small_rows) -> None:
        lines = comparison_csv(small_rows, RunConfig(command="compare")).splitlines()

        assert lines[0].startswith("# version: ")
        assert lines[1].startswith("# config: ")
        assert lines[2] == "scheme,ratio,seed,psnr_db,seconds,converged_shears"
        assert len(lines) == 3 + len(small_rows)

    def test_csv_without_timing_is_reproducible(self, small_rows) -> None:
        u = render(default_spec(PhantomKind.DISK, 32))
        rerun = compare(u, ["shear06", "wave01", "wave02"], [0.3], [0, 1], FAST, baseline_scale=2)
        config = RunConfig(command="compare")

        assert comparison_csv(rerun, config) == comparison_csv(small_rows, config)

    def test_seconds_only_with_timing(self, small_rows) -> None:
        config = RunConfig(command="compare")

        plain = comparison_json(small_rows, config)
        timed = comparison_json(small_rows, config, timing=True)

        assert "seconds" not in plain["rows"][0]
        assert "seconds" in timed["rows"][0]
        assert comparison_csv(small_rows, config).splitlines()[3].split(",")[4] == ""


@pytest.mark.slow
class TestDirectionalAdvantage:
    """Full-size comparison on the 256 x 256 disk phantom."""

    def test_full_sampling_is_exact(self) -> None:
        u = render(default_spec(PhantomKind.DISK, 256))

        rows = compare(u, ["shear14", "wave01"], [1.0], [0])

        for row in rows:
            assert row.psnr_db >= 60.0, row.scheme

    def test_directional_beats_wavelet_on_every_seed(self) -> None:
        u = render(default_spec(PhantomKind.DISK, 256))

        rows = compare(u, ["shear14", "wave01"], [0.1], [0, 1, 2])
        directional = {row.seed: row.psnr_db for row in rows if row.scheme == "shear14"}
        wavelet = {row.seed: row.psnr_db for row in rows if row.scheme == "wave01"}

        for seed in (0, 1, 2):
            assert directional[seed] >= wavelet[seed] + 1.0, f"seed {seed}"
