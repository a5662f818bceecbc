"""Tests for solver and report models."""

import json
import math

import pytest
from pydantic import ValidationError

from directional_cs.models.reports import ComparisonRow, ReconstructionReport, RunConfig, ShearSolve
from directional_cs.models.solver import RipEstimate, SolverOptions, SolverReport


def _report(converged: bool) -> SolverReport:
    return SolverReport(
        iterations=10,
        residual=1e-8,
        objective=2.0,
        converged=converged,
        termination="converged" if converged else "max_iterations",
    )


class TestSolverModels:
    """Tests for SolverOptions, SolverReport and RipEstimate."""

    def test_residual_threshold_scales_with_data(self) -> None:
        assert SolverOptions().residual_threshold(2.0) == pytest.approx(2e-7)

    def test_explicit_residual_tolerance_wins(self) -> None:
        assert SolverOptions(residual_tolerance=0.5).residual_threshold(100.0) == 0.5

    def test_relaxation_bounds(self) -> None:
        with pytest.raises(ValidationError):
            SolverOptions(relaxation=2.0)

    def test_converged_report_needs_finite_residual(self) -> None:
        with pytest.raises(ValidationError, match="non-finite"):
            SolverReport(iterations=1, residual=math.inf, objective=0.0, converged=True)

    def test_rip_estimate_dict(self) -> None:
        payload = RipEstimate(delta=0.3, sparsity=2, exhaustive=False, supports_checked=50).to_dict()

        assert payload == {
            "delta": 0.3,
            "k": 2,
            "mode": "randomized",
            "lower_bound": True,
            "supports_checked": 50,
        }


class TestReconstructionReport:
    """Tests for ReconstructionReport."""

    def test_psnr_omitted_without_ground_truth(self) -> None:
        report = ReconstructionReport(scheme="shear06")

        assert "psnr_db" not in report.to_dict()

    def test_infinite_psnr_is_json_safe(self) -> None:
        payload = ReconstructionReport(scheme="wave01", psnr_db=math.inf).to_dict()

        assert payload["psnr_db"] == "inf"
        json.dumps(payload, allow_nan=False)

    def test_degraded_counts(self) -> None:
        report = ReconstructionReport(
            scheme="shear06",
            solves=[
                ShearSolve(label="horizontal:0", q=0, level=0, cone="horizontal", report=_report(True)),
                ShearSolve(label="vertical:0", q=0, level=0, cone="vertical", report=_report(False)),
            ],
        )

        payload = report.to_dict()

        assert report.degraded
        assert payload["converged_shears"] == 1
        assert payload["total_shears"] == 2
        assert payload["solves"][1]["termination"] == "max_iterations"
        assert payload["solves"][0]["cone"] == "horizontal"

    def test_baseline_solve_has_no_shear_fields(self) -> None:
        payload = ShearSolve(label="wave01", report=_report(True)).to_dict()

        assert "q" not in payload
        assert payload["label"] == "wave01"


class TestRunConfig:
    """Tests for RunConfig and ComparisonRow."""

    def test_version_is_recorded(self) -> None:
        from directional_cs import __version__

        assert RunConfig(command="mask").to_dict()["version"] == __version__

    def test_row_dict(self) -> None:
        row = ComparisonRow(
            scheme="shear06",
            ratio=0.1,
            seed=0,
            psnr_db=31.5,
            seconds=1.2,
            converged_shears=6,
            total_shears=6,
        )

        assert row.to_dict()["psnr_db"] == 31.5
        assert row.to_dict()["total_shears"] == 6
