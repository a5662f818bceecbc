"""Domain models."""

from directional_cs.models.grid import (
    ComplexGrid,
    Grid,
    RealGrid,
    SpectralError,
    is_power_of_two,
    require_square_power_of_two,
)
from directional_cs.models.mask import MaskEntry, SamplingMask
from directional_cs.models.phantom import ZERO_POLYNOMIAL, PhantomSpec, Polynomial, c2_norm
from directional_cs.models.reports import (
    ComparisonRow,
    ReconstructionReport,
    RunConfig,
    ShearSolve,
)
from directional_cs.models.shear import ShearIndex, ShearKey
from directional_cs.models.solver import RipEstimate, SolverOptions, SolverReport

__all__ = [
    "ComplexGrid",
    "Grid",
    "RealGrid",
    "SpectralError",
    "is_power_of_two",
    "require_square_power_of_two",
    "MaskEntry",
    "SamplingMask",
    "ZERO_POLYNOMIAL",
    "PhantomSpec",
    "Polynomial",
    "c2_norm",
    "ComparisonRow",
    "ReconstructionReport",
    "RunConfig",
    "ShearSolve",
    "ShearIndex",
    "ShearKey",
    "RipEstimate",
    "SolverOptions",
    "SolverReport",
]
