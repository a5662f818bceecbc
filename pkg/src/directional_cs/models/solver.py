"""Pydantic models for basis-pursuit options and diagnostics."""

import math

from pydantic import BaseModel, Field, model_validator


class SolverOptions(BaseModel):
    """Stopping rules and splitting parameters for basis pursuit."""

    max_iterations: int = Field(default=2000, ge=1)
    residual_tolerance: float | None = Field(
        default=None,
        gt=0.0,
        description="Absolute tolerance on ||Ax - y||_2; None means residual_factor * ||y||_2",
    )
    residual_factor: float = Field(default=1e-7, gt=0.0)
    relative_tolerance: float = Field(default=1e-9, gt=0.0)
    step: float | None = Field(
        default=None,
        gt=0.0,
        description="Douglas-Rachford step gamma; None scales it to the data",
    )
    relaxation: float = Field(default=1.0, gt=0.0, lt=2.0)

    def residual_threshold(self, data_norm: float) -> float:
        """Absolute residual tolerance for right-hand side norm ||y||_2."""
        if self.residual_tolerance is not None:
            return self.residual_tolerance
        return self.residual_factor * data_norm

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON output."""
        return self.model_dump()


class SolverReport(BaseModel):
    """Termination diagnostics of one basis-pursuit solve."""

    iterations: int = Field(ge=0)
    residual: float = Field(ge=0.0)
    objective: float = Field(ge=0.0)
    converged: bool
    termination: str = Field(
        default="converged",
        description="converged | max_iterations | trivial",
    )

    @model_validator(mode="after")
    def validate_consistency(self) -> "SolverReport":
        """A converged report must carry a finite residual."""
        if self.converged and not math.isfinite(self.residual):
            raise ValueError("Converged report with non-finite residual")
        return self

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON output."""
        return {
            "iterations": self.iterations,
            "residual": self.residual,
            "objective": self.objective,
            "converged": self.converged,
            "termination": self.termination,
        }


class RipEstimate(BaseModel):
    """Restricted isometry constant of a matrix for sparsity k."""

    delta: float = Field(ge=0.0)
    sparsity: int = Field(ge=1)
    exhaustive: bool
    supports_checked: int = Field(ge=0)

    @property
    def is_lower_bound(self) -> bool:
        """Sampled supports only bound delta_k from below."""
        return not self.exhaustive

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON output."""
        return {
            "delta": self.delta,
            "k": self.sparsity,
            "mode": "exhaustive" if self.exhaustive else "randomized",
            "lower_bound": self.is_lower_bound,
            "supports_checked": self.supports_checked,
        }
