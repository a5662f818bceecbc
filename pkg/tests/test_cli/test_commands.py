"""End-to-end tests for the dircs command line."""

import json
from pathlib import Path

import pytest
from typer.testing import CliRunner

from directional_cs import __version__
from directional_cs.cli import app
from directional_cs.spectral.io import read_grid

runner = CliRunner()


def _invoke(*args: str):
    return runner.invoke(app, list(args))


@pytest.fixture
def phantom_file(tmp_path: Path) -> Path:
    result = _invoke("phantom", "--out", str(tmp_path), "--grid-size", "32")
    assert result.exit_code == 0, result.output
    return tmp_path / "phantom.cifg"


@pytest.fixture
def mask_file(tmp_path: Path) -> Path:
    result = _invoke(
        "mask", "--out", str(tmp_path), "--grid-size", "32", "--scheme", "shear06", "--ratio", "0.3"
    )
    assert result.exit_code == 0, result.output
    return tmp_path / "mask.json"


class TestRoot:
    """Tests for the application callback."""

    def test_version(self) -> None:
        result = _invoke("--version")

        assert result.exit_code == 0
        assert __version__ in result.output

    def test_bad_log_level(self, tmp_path: Path) -> None:
        result = _invoke("--log-level", "chatty", "phantom", "--out", str(tmp_path))

        assert result.exit_code == 2


class TestArtifactCommands:
    """Tests for phantom, mask and measure."""

    def test_phantom_outputs(self, tmp_path: Path, phantom_file: Path) -> None:
        assert read_grid(phantom_file).shape == (32, 32)
        assert (tmp_path / "phantom.pgm").read_bytes().startswith(b"P5")
        assert json.loads((tmp_path / "phantom.json").read_text())["spec"]["kind"] == "disk"

    def test_missing_out_dir(self, tmp_path: Path) -> None:
        result = _invoke("phantom", "--out", str(tmp_path / "missing"))

        assert result.exit_code == 2

    def test_mask_json(self, mask_file: Path) -> None:
        payload = json.loads(mask_file.read_text())

        assert payload["N"] == 32
        assert len(payload["shears"]) == 6
        assert payload["config"]["command"] == "mask"

    def test_mask_is_reproducible(self, tmp_path: Path) -> None:
        first, second = tmp_path / "a", tmp_path / "b"
        first.mkdir()
        second.mkdir()

        for out in (first, second):
            _invoke("mask", "--out", str(out), "--grid-size", "32", "--scheme", "shear06", "--per-shear", "10")

        assert (first / "mask.json").read_text() == (second / "mask.json").read_text()

    def test_seed_from_environment(self, tmp_path: Path, monkeypatch: pytest.MonkeyPatch) -> None:
        args = ["mask", "--out", str(tmp_path), "--grid-size", "32", "--scheme", "shear06", "--per-shear", "10"]
        monkeypatch.setenv("CIFG_SEED", "5")

        runner.invoke(app, args)

        assert json.loads((tmp_path / "mask.json").read_text())["seed"] == 5

    def test_unknown_scheme(self, tmp_path: Path) -> None:
        result = _invoke("mask", "--out", str(tmp_path), "--scheme", "shear07", "--ratio", "0.1")

        assert result.exit_code == 2

    def test_wave01_needs_ratio(self, tmp_path: Path) -> None:
        result = _invoke("mask", "--out", str(tmp_path), "--scheme", "wave01")

        assert result.exit_code == 2

    def test_measure(self, tmp_path: Path, phantom_file: Path, mask_file: Path) -> None:
        result = _invoke("measure", "--out", str(tmp_path), "--image", str(phantom_file), "--mask", str(mask_file))

        assert result.exit_code == 0, result.output
        sidecar = json.loads((tmp_path / "measurements.json").read_text())
        assert 0 < sidecar["nonzero"] <= sidecar["cardinality"]

    def test_measure_size_mismatch(self, tmp_path: Path, phantom_file: Path) -> None:
        _invoke("mask", "--out", str(tmp_path), "--grid-size", "64", "--scheme", "shear06", "--ratio", "0.1")

        result = _invoke(
            "measure", "--out", str(tmp_path), "--image", str(phantom_file), "--mask", str(tmp_path / "mask.json")
        )

        assert result.exit_code == 1


class TestReconstructionCommands:
    """Tests for reconstruct and compare."""

    def test_reconstruct_from_image(self, tmp_path: Path, phantom_file: Path, mask_file: Path) -> None:
        result = _invoke(
            "reconstruct",
            "--out", str(tmp_path),
            "--scheme", "shear06",
            "--image", str(phantom_file),
            "--mask", str(mask_file),
            "--max-iterations", "30",
        )

        assert result.exit_code == 0, result.output
        report = json.loads((tmp_path / "report.json").read_text())
        assert report["scheme"] == "shear06"
        assert report["total_shears"] == 6
        assert "psnr_db" in report
        assert read_grid(tmp_path / "reconstruction.cifg").shape == (32, 32)

    def test_reconstruct_from_measurements(self, tmp_path: Path, phantom_file: Path, mask_file: Path) -> None:
        _invoke("measure", "--out", str(tmp_path), "--image", str(phantom_file), "--mask", str(mask_file))

        result = _invoke(
            "reconstruct",
            "--out", str(tmp_path),
            "--scheme", "wave02",
            "--measurements", str(tmp_path / "measurements.cifg"),
            "--max-iterations", "30",
        )

        assert result.exit_code == 0, result.output
        report = json.loads((tmp_path / "report.json").read_text())
        assert report["scheme"] == "wave02"
        assert "psnr_db" not in report

    def test_needs_one_input(self, tmp_path: Path, mask_file: Path) -> None:
        result = _invoke("reconstruct", "--out", str(tmp_path), "--scheme", "shear06", "--mask", str(mask_file))

        assert result.exit_code == 2

    def test_strict_fails_on_unconverged(self, tmp_path: Path, phantom_file: Path, mask_file: Path) -> None:
        result = _invoke(
            "reconstruct",
            "--out", str(tmp_path),
            "--scheme", "shear06",
            "--image", str(phantom_file),
            "--mask", str(mask_file),
            "--max-iterations", "1",
            "--strict",
        )

        assert result.exit_code == 1
        assert json.loads((tmp_path / "report.json").read_text())["degraded"] is True

    def test_compare(self, tmp_path: Path) -> None:
        result = _invoke(
            "compare",
            "--out", str(tmp_path),
            "--scheme", "shear06",
            "--scheme", "wave01",
            "--ratio", "0.3",
            "--grid-size", "32",
            "--finest-scale", "2",
            "--max-iterations", "20",
        )

        assert result.exit_code == 0, result.output
        lines = (tmp_path / "comparison.csv").read_text().splitlines()
        assert lines[2] == "scheme,ratio,seed,psnr_db,seconds,converged_shears"
        assert [line.split(",")[0] for line in lines[3:]] == ["shear06", "wave01"]
        assert len(json.loads((tmp_path / "comparison.json").read_text())["rows"]) == 2

    def test_compare_unknown_scheme(self, tmp_path: Path) -> None:
        result = _invoke("compare", "--out", str(tmp_path), "--scheme", "shear99", "--ratio", "0.1")

        assert result.exit_code == 2
        assert not (tmp_path / "comparison.csv").exists()

    def test_compare_strict_fails_on_degraded_rows(self, tmp_path: Path) -> None:
        result = _invoke(
            "compare",
            "--out", str(tmp_path),
            "--scheme", "wave01",
            "--ratio", "0.3",
            "--grid-size", "32",
            "--finest-scale", "2",
            "--max-iterations", "1",
            "--strict",
        )

        assert result.exit_code == 1
        assert (tmp_path / "comparison.csv").exists()
        assert json.loads((tmp_path / "comparison.json").read_text())["rows"][0]["converged_shears"] == 0

    def test_compare_without_strict_tolerates_degraded_rows(self, tmp_path: Path) -> None:
        result = _invoke(
            "compare",
            "--out", str(tmp_path),
            "--scheme", "wave01",
            "--ratio", "0.3",
            "--grid-size", "32",
            "--finest-scale", "2",
            "--max-iterations", "1",
        )

        assert result.exit_code == 0, result.output

    def test_reconstruct_shear_baseline(self, tmp_path: Path, phantom_file: Path) -> None:
        _invoke("mask", "--out", str(tmp_path), "--grid-size", "32", "--scheme", "shear", "--finest-scale", "2", "--ratio", "0.3")

        result = _invoke(
            "reconstruct",
            "--out", str(tmp_path),
            "--scheme", "shear",
            "--image", str(phantom_file),
            "--mask", str(tmp_path / "mask.json"),
            "--max-iterations", "20",
        )

        assert result.exit_code == 0, result.output
        report = json.loads((tmp_path / "report.json").read_text())
        assert report["scheme"] == "shear"
        assert report["total_shears"] == 1


class TestRiptest:
    """Tests for riptest."""

    def test_exhaustive_small_system(self, tmp_path: Path) -> None:
        columns = [arg for c in range(10) for arg in ("--column", str(c))]

        result = _invoke("riptest", "--out", str(tmp_path), "--k", "2", "--exhaustive", *columns)

        assert result.exit_code == 0, result.output
        payload = json.loads((tmp_path / "rip.json").read_text())
        assert payload["mode"] == "exhaustive"
        assert payload["rows"] == 256
        assert payload["columns"] == 10
        assert payload["delta"] <= 1e-8

    def test_randomized_with_draws(self, tmp_path: Path) -> None:
        result = _invoke(
            "riptest",
            "--out", str(tmp_path),
            "--shear", "1/2",
            "--density", "discrete",
            "--draws", "60",
            "--samples", "40",
            "--randomized",
        )

        assert result.exit_code == 0, result.output
        payload = json.loads((tmp_path / "rip.json").read_text())
        assert payload["lower_bound"] is True
        assert payload["rows"] == 60

    def test_shear_outside_set(self, tmp_path: Path) -> None:
        result = _invoke("riptest", "--out", str(tmp_path), "--shear", "1/8")

        assert result.exit_code == 2
