"""Pydantic models for run configuration and reconstruction reports."""

import math
from typing import Any

from pydantic import BaseModel, Field

from directional_cs import __version__
from directional_cs.models.solver import SolverReport


def _json_float(value: float | None) -> float | str | None:
    """Render +/-inf as strings since JSON has no infinity."""
    if value is None:
        return None
    if math.isinf(value):
        return "inf" if value > 0 else "-inf"
    return value


class RunConfig(BaseModel):
    """Parameters of one command invocation, echoed into every artifact."""

    command: str
    parameters: dict[str, Any] = Field(default_factory=dict)
    version: str = __version__

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON output."""
        return {
            "command": self.command,
            "parameters": self.parameters,
            "version": self.version,
        }


class ShearSolve(BaseModel):
    """Solver outcome for one directional subproblem."""

    label: str
    q: int | None = None
    level: int | None = None
    cone: str | None = None
    report: SolverReport

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON output."""
        entry: dict = {"label": self.label}
        if self.q is not None:
            entry.update({"q": self.q, "level": self.level, "cone": self.cone})
        entry.update(self.report.to_dict())
        return entry


class ReconstructionReport(BaseModel):
    """Diagnostics of a reconstruction run."""

    scheme: str
    solves: list[ShearSolve] = Field(default_factory=list)
    psnr_db: float | None = None
    seconds: float = Field(default=0.0, ge=0.0)
    imaginary_residue: float = Field(default=0.0, ge=0.0)
    trivial: bool = Field(default=False, description="True when all measurements vanish")
    config: dict[str, Any] = Field(default_factory=dict)
    version: str = __version__

    @property
    def converged_count(self) -> int:
        return sum(1 for solve in self.solves if solve.report.converged)

    @property
    def degraded(self) -> bool:
        """True when at least one subproblem did not converge."""
        return self.converged_count < len(self.solves)

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON output; psnr_db is omitted without ground truth."""
        result: dict = {
            "scheme": self.scheme,
            "version": self.version,
            "config": self.config,
            "seconds": self.seconds,
            "imaginary_residue": self.imaginary_residue,
            "trivial": self.trivial,
            "converged_shears": self.converged_count,
            "total_shears": len(self.solves),
            "degraded": self.degraded,
            "solves": [solve.to_dict() for solve in self.solves],
        }
        if self.psnr_db is not None:
            result["psnr_db"] = _json_float(self.psnr_db)
        return result


class ComparisonRow(BaseModel):
    """One (scheme, ratio, seed) cell of a comparison table."""

    scheme: str
    ratio: float
    seed: int
    psnr_db: float
    seconds: float
    converged_shears: int
    total_shears: int

    @property
    def degraded(self) -> bool:
        return self.converged_shears < self.total_shears

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON output."""
        return {
            "scheme": self.scheme,
            "ratio": self.ratio,
            "seed": self.seed,
            "psnr_db": _json_float(self.psnr_db),
            "seconds": self.seconds,
            "converged_shears": self.converged_shears,
            "total_shears": self.total_shears,
        }
