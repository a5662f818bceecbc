"""Exhaustive basis-pursuit oracle for small dense instances."""

import itertools
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from directional_cs.config.standards import (
    ORACLE_FEASIBILITY,
    ORACLE_MAX_COLUMNS,
    ORACLE_MAX_ROWS,
    ORACLE_MAX_SPARSITY,
    ORACLE_TIE_TOLERANCE,
)
from directional_cs.solvers.linear_map import SolverError


@dataclass
class OracleResult:
    """Minimum-l1 feasible candidate over all supports of size <= k_max."""

    feasible: bool
    k_max: int
    solution: NDArray | None = field(default=None, repr=False)
    support: tuple[int, ...] = ()
    objective: float | None = None
    supports_checked: int = 0

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON output."""
        return {
            "feasible": self.feasible,
            "k_max": self.k_max,
            "support": list(self.support),
            "objective": self.objective,
            "supports_checked": self.supports_checked,
        }


def brute_force_bp(
    matrix: NDArray, y: NDArray, k_max: int, feasibility: float = ORACLE_FEASIBILITY
) -> OracleResult:
    """Enumerate supports of size <= k_max and keep the minimum-l1 feasible fit.

    Args:
        matrix: Dense m x n matrix, m <= 16 and n <= 32
        y: Right-hand side of length m
        k_max: Largest support size, at most 4
        feasibility: Residual bound for a candidate to count as feasible

    Returns:
        OracleResult; ``feasible`` is False when no support of size <= k_max fits

    Raises:
        SolverError: If the instance exceeds the enumeration caps or shapes disagree
    """
    dense = np.asarray(matrix)
    rows, cols = dense.shape
    if rows > ORACLE_MAX_ROWS or cols > ORACLE_MAX_COLUMNS or k_max > ORACLE_MAX_SPARSITY:
        raise SolverError(
            f"Oracle limited to {ORACLE_MAX_ROWS}x{ORACLE_MAX_COLUMNS} and k <= "
            f"{ORACLE_MAX_SPARSITY}, got {rows}x{cols} with k={k_max}",
            dense.shape,
        )
    if k_max < 0:
        raise SolverError(f"k_max must be nonnegative, got {k_max}")
    rhs = np.asarray(y)
    if rhs.shape != (rows,):
        raise SolverError(f"y has shape {rhs.shape}, expected ({rows},)", rhs.shape)

    dtype = np.result_type(dense, rhs, np.float64)
    best = OracleResult(feasible=False, k_max=k_max)
    checked = 0
    for size in range(k_max + 1):
        for support in itertools.combinations(range(cols), size):
            checked += 1
            candidate = np.zeros(cols, dtype=dtype)
            if size:
                columns = list(support)
                coefficients, *_ = np.linalg.lstsq(dense[:, columns], rhs, rcond=None)
                candidate[columns] = coefficients
            residual = float(np.linalg.norm(dense @ candidate - rhs))
            if residual > feasibility:
                continue
            objective = float(np.sum(np.abs(candidate)))
            if best.objective is None or _improves(objective, best.objective):
                best = OracleResult(
                    feasible=True,
                    k_max=k_max,
                    solution=candidate,
                    support=tuple(support),
                    objective=objective,
                )
    best.supports_checked = checked
    return best


def _improves(objective: float, incumbent: float) -> bool:
    """Strict improvement beyond a relative tolerance; ties keep the smaller support."""
    return objective < incumbent - ORACLE_TIE_TOLERANCE * max(1.0, incumbent)
