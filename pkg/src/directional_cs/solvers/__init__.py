"""Basis pursuit, exhaustive oracle and restricted isometry estimation."""

from directional_cs.solvers.basis_pursuit import (
    analysis_basis_pursuit,
    basis_pursuit,
    default_step,
    soft_threshold,
)
from directional_cs.solvers.linear_map import LinearMap, SolverError
from directional_cs.solvers.oracle import OracleResult, brute_force_bp
from directional_cs.solvers.rip import rip_constant, weighted_matrix

__all__ = [
    "analysis_basis_pursuit",
    "basis_pursuit",
    "default_step",
    "soft_threshold",
    "LinearMap",
    "SolverError",
    "OracleResult",
    "brute_force_bp",
    "rip_constant",
    "weighted_matrix",
]
