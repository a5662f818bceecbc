"""Weighted sampling matrices and empirical restricted isometry constants."""

import itertools
import logging
import math
from collections.abc import Sequence

import numpy as np
from numpy.typing import NDArray

from directional_cs.config.standards import RIP_EXHAUSTIVE_MAX_COLUMNS, RIP_EXHAUSTIVE_MAX_SPARSITY
from directional_cs.models.solver import RipEstimate

logger = logging.getLogger(__name__)


def weighted_matrix(
    points: Sequence[tuple[int, int]],
    probabilities: Sequence[float] | NDArray[np.float64],
    atoms: NDArray,
    count: int | None = None,
) -> NDArray[np.complex128]:
    """Matrix with entries F(sigma_lambda)(n) / N / sqrt(m p(n)).

    Args:
        points: Sampled centered frequencies n (rows, in order)
        probabilities: p(n) for each sampled point
        atoms: Synthesis atoms sigma_lambda as an (L, N, N) array (columns, in order)
        count: Number of draws m; defaults to the number of points

    Returns:
        Dense (#points, L) complex matrix

    Raises:
        ValueError: If a sampled point has zero density or the inputs disagree
    """
    weights = np.asarray(probabilities, dtype=np.float64)
    if weights.shape != (len(points),):
        raise ValueError(f"Got {len(points)} points but {weights.size} probabilities")
    if np.any(weights <= 0):
        bad = points[int(np.argmax(weights <= 0))]
        raise ValueError(f"Zero density at sampled point {bad}")
    stack = np.asarray(atoms)
    if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
        raise ValueError(f"Atoms must have shape (L, N, N), got {stack.shape}")

    size = stack.shape[1]
    m = len(points) if count is None else count
    spectra = np.fft.fft2(stack, axes=(1, 2)) / size
    rows = np.array([n1 % size for n1, _ in points], dtype=np.int64)
    cols = np.array([n2 % size for _, n2 in points], dtype=np.int64)
    sampled = spectra[:, rows, cols].T
    return sampled / np.sqrt(m * weights)[:, None]


def _support_deviation(matrix: NDArray, support: tuple[int, ...]) -> float:
    columns = matrix[:, list(support)]
    eigenvalues = np.linalg.eigvalsh(columns.conj().T @ columns)
    return float(np.max(np.abs(eigenvalues - 1.0)))


def rip_constant(
    matrix: NDArray,
    k: int,
    exhaustive: bool | None = None,
    samples: int = 2000,
    seed: int = 0,
) -> RipEstimate:
    """Restricted isometry constant delta_k = max over |S| <= k of ||A_S^* A_S - I||_2.

    Exhaustive mode scans every support of size <= k; it is chosen automatically
    for at most 24 columns and k <= 4. Randomized mode checks ``samples``
    supports of size k (all of them when there are fewer) and returns a lower bound.

    Raises:
        ValueError: If k is not in [1, columns]
    """
    dense = np.asarray(matrix)
    columns = dense.shape[1]
    if not 1 <= k <= columns:
        raise ValueError(f"k must lie in [1, {columns}], got {k}")
    if exhaustive is None:
        exhaustive = columns <= RIP_EXHAUSTIVE_MAX_COLUMNS and k <= RIP_EXHAUSTIVE_MAX_SPARSITY

    delta = 0.0
    checked = 0
    if exhaustive:
        for size in range(1, k + 1):
            for support in itertools.combinations(range(columns), size):
                delta = max(delta, _support_deviation(dense, support))
                checked += 1
        return RipEstimate(delta=delta, sparsity=k, exhaustive=True, supports_checked=checked)

    total = math.comb(columns, k)
    if total <= samples:
        supports = itertools.combinations(range(columns), k)
    else:
        rng = np.random.default_rng(seed)
        supports = (
            tuple(sorted(rng.choice(columns, size=k, replace=False).tolist())) for _ in range(samples)
        )
    for support in supports:
        delta = max(delta, _support_deviation(dense, support))
        checked += 1
    logger.debug("Randomized RIP bound over %d supports: delta_%d >= %.6g", checked, k, delta)
    return RipEstimate(delta=delta, sparsity=k, exhaustive=False, supports_checked=checked)
