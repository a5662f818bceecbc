"""Basis pursuit min ||x||_1 s.t. A x = y by relaxed Douglas-Rachford splitting.

Iteration, with P the projection onto {A x = y} and soft the complex
soft-thresholding at level gamma:

    x = P(z);  w = soft(2 x - z, gamma);  z = z + lambda (w - x)

The reported iterate is always x = P(z), so it is feasible to rounding.
``analysis_basis_pursuit`` handles the analysis form min ||Psi g||_1 for
Parseval frames by ADMM.
"""

import logging

import numpy as np

from directional_cs.models.solver import SolverOptions, SolverReport
from directional_cs.solvers.linear_map import LinearMap, SolverError, Vector

logger = logging.getLogger(__name__)


def soft_threshold(values: Vector, level: float) -> Vector:
    """Shrink magnitudes by ``level``; phases are kept."""
    magnitude = np.abs(values)
    scale = np.maximum(1.0 - level / np.maximum(magnitude, np.finfo(float).tiny), 0.0)
    return values * scale


def default_step(operator: LinearMap, y: Vector) -> float:
    """gamma = 0.1 * ||A^* y||_inf, or 1 when that vanishes."""
    peak = float(np.max(np.abs(operator.adjoint(y)), initial=0.0))
    return 0.1 * peak if peak > 0 else 1.0


def basis_pursuit(
    operator: LinearMap, y: Vector, options: SolverOptions | None = None
) -> tuple[Vector, SolverReport]:
    """Approximately solve min ||x||_1 subject to A x = y.

    Args:
        operator: Measurement operator A
        y: Right-hand side
        options: Stopping rules; library defaults when omitted

    Returns:
        Tuple of (x, SolverReport). Non-convergence is reported, never raised.

    Raises:
        SolverError: If y does not match the operator's output dimension
    """
    options = options or SolverOptions()
    operator.check_output(y)
    data_norm = float(np.linalg.norm(y))
    threshold = options.residual_threshold(data_norm)

    if data_norm == 0.0:
        zeros = np.zeros(operator.input_dim, dtype=np.result_type(y, np.float64))
        return zeros, SolverReport(
            iterations=0, residual=0.0, objective=0.0, converged=True, termination="trivial"
        )

    gamma = options.step if options.step is not None else default_step(operator, y)
    z = operator.least_squares(y)
    previous = operator.project(z, y)
    x = previous
    converged = False
    iteration = 0
    for iteration in range(1, options.max_iterations + 1):
        w = soft_threshold(2.0 * previous - z, gamma)
        z = z + options.relaxation * (w - previous)
        x = operator.project(z, y)

        change = float(np.linalg.norm(x - previous))
        scale = max(float(np.linalg.norm(x)), np.finfo(float).tiny)
        previous = x
        if change <= options.relative_tolerance * scale:
            residual = float(np.linalg.norm(operator.forward(x) - y))
            if residual <= threshold:
                converged = True
                break

    residual = float(np.linalg.norm(operator.forward(x) - y))
    objective = float(np.sum(np.abs(x)))
    report = SolverReport(
        iterations=iteration,
        residual=residual,
        objective=objective,
        converged=converged and residual <= threshold,
        termination="converged" if converged else "max_iterations",
    )
    logger.debug(
        "Basis pursuit %s after %d iterations (residual %.3e, objective %.6g)",
        report.termination,
        iteration,
        residual,
        objective,
    )
    return x, report


def analysis_basis_pursuit(
    operator: LinearMap, frame: LinearMap, y: Vector, options: SolverOptions | None = None
) -> tuple[Vector, SolverReport]:
    """Approximately solve min ||Psi g||_1 subject to A g = y for a Parseval frame Psi.

    Scaled ADMM on the split w = Psi g with penalty 1 / gamma:

        g = P(Psi^*(w - u));  w = soft(Psi g + u, gamma);  u = u + Psi g - w

    ``frame.forward`` is Psi and ``frame.adjoint`` is Psi^*; Psi^* Psi = I makes the
    g-update a projection, so the reported g is feasible to rounding.

    Args:
        operator: Row-orthonormal measurement operator A on images
        frame: Parseval analysis operator Psi
        y: Right-hand side
        options: Stopping rules; ``step`` overrides gamma

    Returns:
        Tuple of (g, SolverReport); the objective is ||Psi g||_1

    Raises:
        SolverError: If y or the frame does not match the operator
    """
    options = options or SolverOptions()
    operator.check_output(y)
    if frame.input_dim != operator.input_dim:
        raise SolverError(
            f"Frame acts on {frame.input_dim} unknowns, operator on {operator.input_dim}",
            (frame.output_dim, frame.input_dim),
        )
    data_norm = float(np.linalg.norm(y))
    threshold = options.residual_threshold(data_norm)

    if data_norm == 0.0:
        zeros = np.zeros(operator.input_dim, dtype=np.result_type(y, np.float64))
        return zeros, SolverReport(
            iterations=0, residual=0.0, objective=0.0, converged=True, termination="trivial"
        )

    previous = operator.least_squares(y)
    analysis = frame.forward(previous)
    peak = float(np.max(np.abs(analysis), initial=0.0))
    gamma = options.step if options.step is not None else (0.1 * peak if peak > 0 else 1.0)
    w = soft_threshold(analysis, gamma)
    u = analysis - w
    g = previous
    converged = False
    iteration = 0
    for iteration in range(1, options.max_iterations + 1):
        g = operator.project(frame.adjoint(w - u), y)
        analysis = frame.forward(g)
        w = soft_threshold(analysis + u, gamma)
        u = u + analysis - w

        change = float(np.linalg.norm(g - previous))
        scale = max(float(np.linalg.norm(g)), np.finfo(float).tiny)
        previous = g
        if change <= options.relative_tolerance * scale:
            residual = float(np.linalg.norm(operator.forward(g) - y))
            if residual <= threshold:
                converged = True
                break

    residual = float(np.linalg.norm(operator.forward(g) - y))
    report = SolverReport(
        iterations=iteration,
        residual=residual,
        objective=float(np.sum(np.abs(frame.forward(g)))),
        converged=converged and residual <= threshold,
        termination="converged" if converged else "max_iterations",
    )
    logger.debug(
        "Analysis basis pursuit %s after %d iterations (residual %.3e, objective %.6g)",
        report.termination,
        iteration,
        residual,
        report.objective,
    )
    return g, report
