"""Abstract linear operators with adjoints and affine projections."""

from collections.abc import Callable
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
from numpy.typing import NDArray

Vector = NDArray[np.complexfloating] | NDArray[np.floating]


class SolverError(Exception):
    """Raised for invalid solver inputs (dimension mismatch, oracle caps)."""

    def __init__(self, message: str, shape: tuple[int, ...] | None = None):
        super().__init__(message)
        self.shape = shape


@dataclass(frozen=True, eq=False)
class LinearMap:
    """Linear operator A: C^input_dim -> C^output_dim together with its adjoint.

    ``row_orthonormal`` marks operators with A A^* = I, whose affine projection
    is z - A^*(A z - b). Dense maps fall back to the pseudo-inverse.
    """

    forward: Callable[[Vector], Vector]
    adjoint: Callable[[Vector], Vector]
    input_dim: int
    output_dim: int
    row_orthonormal: bool = False
    matrix: NDArray | None = field(default=None, repr=False)

    @classmethod
    def from_matrix(cls, matrix: NDArray, tolerance: float = 1e-12) -> "LinearMap":
        """Wrap a dense matrix; detects orthonormal rows."""
        dense = np.asarray(matrix)
        if dense.ndim != 2:
            raise SolverError(f"Expected a 2D matrix, got shape {dense.shape}", dense.shape)
        rows, cols = dense.shape
        gram = dense @ dense.conj().T
        orthonormal = bool(np.max(np.abs(gram - np.eye(rows)), initial=0.0) <= tolerance)
        return cls(
            forward=lambda x: dense @ x,
            adjoint=lambda y: dense.conj().T @ y,
            input_dim=cols,
            output_dim=rows,
            row_orthonormal=orthonormal,
            matrix=dense,
        )

    @cached_property
    def _pseudo_inverse(self) -> NDArray:
        if self.matrix is None:
            raise SolverError("Operator is neither row-orthonormal nor dense; no projection available")
        return np.linalg.pinv(self.matrix)

    def check_input(self, x: Vector) -> None:
        if x.shape != (self.input_dim,):
            raise SolverError(f"Input has shape {x.shape}, expected ({self.input_dim},)", x.shape)

    def check_output(self, y: Vector) -> None:
        if y.shape != (self.output_dim,):
            raise SolverError(f"Measurements have shape {y.shape}, expected ({self.output_dim},)", y.shape)

    def least_squares(self, y: Vector) -> Vector:
        """Minimum-norm solution A^+ y (A^* y for orthonormal rows)."""
        if self.row_orthonormal:
            return self.adjoint(y)
        return self._pseudo_inverse @ y

    def project(self, z: Vector, y: Vector) -> Vector:
        """Orthogonal projection of z onto {x : A x = y}."""
        correction = self.forward(z) - y
        if self.row_orthonormal:
            return z - self.adjoint(correction)
        return z - self._pseudo_inverse @ correction

    def adjoint_mismatch(self, rng: np.random.Generator, probes: int = 3) -> float:
        """Largest relative gap between <A x, y> and <x, A^* y> over random complex probes."""
        worst = 0.0
        for _ in range(probes):
            x = rng.standard_normal(self.input_dim) + 1j * rng.standard_normal(self.input_dim)
            y = rng.standard_normal(self.output_dim) + 1j * rng.standard_normal(self.output_dim)
            left = np.vdot(y, self.forward(x))
            right = np.vdot(self.adjoint(y), x)
            scale = max(abs(left), abs(right), 1e-300)
            worst = max(worst, float(abs(left - right) / scale))
        return worst
