"""Shear-indexed sampling densities on the centered frequency grid.

Omega_J is the full centered N x N grid. Vertical-cone densities swap the
roles of n1 and n2.
"""

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from numpy.typing import ArrayLike, NDArray

from directional_cs.config.settings import get_settings
from directional_cs.config.standards import Cone, DensityKind
from directional_cs.models.shear import ShearIndex
from directional_cs.spectral.transforms import frequency_mesh


def continuum_weight(finest_scale: int, shear: float, n1: ArrayLike, n2: ArrayLike) -> NDArray[np.float64]:
    """Unnormalized 1 / (J^2 (1 + |n1|)(1 + |n2 - s n1|))."""
    a = np.asarray(n1, dtype=np.float64)
    b = np.asarray(n2, dtype=np.float64)
    return 1.0 / (finest_scale**2 * (1.0 + np.abs(a)) * (1.0 + np.abs(b - shear * a)))


def discrete_weight(
    finest_scale: int, shear: float, n1: ArrayLike, n2: ArrayLike, exponent: float = 5.0
) -> NDArray[np.float64]:
    """Unnormalized 1 / ((1 + |n1|)^e (1 + |2^(J/2) n2 - s n1|)^e)."""
    a = np.asarray(n1, dtype=np.float64)
    b = np.asarray(n2, dtype=np.float64)
    scale = 2.0 ** (finest_scale / 2)
    return 1.0 / ((1.0 + np.abs(a)) ** exponent * (1.0 + np.abs(scale * b - shear * a)) ** exponent)


def radial_weight(n1: ArrayLike, n2: ArrayLike, exponent: float = 2.0) -> NDArray[np.float64]:
    """Unnormalized 1 / (1 + ||n||_2)^e."""
    return 1.0 / (1.0 + np.hypot(np.asarray(n1, dtype=np.float64), np.asarray(n2, dtype=np.float64))) ** exponent


def normalize(weights: ArrayLike) -> float:
    """Normalization constant c with sum(c * weights) = 1.

    Raises:
        ValueError: If the domain is empty or carries no mass
    """
    values = np.asarray(weights, dtype=np.float64)
    if values.size == 0:
        raise ValueError("Cannot normalize a density over an empty domain")
    total = float(np.sum(values))
    if not total > 0.0 or not math.isfinite(total):
        raise ValueError(f"Density mass must be positive and finite, got {total}")
    return 1.0 / total


@dataclass(frozen=True, eq=False)
class SamplingDensity:
    """Normalized point-mass table over Omega_J in storage layout (DC at (0, 0))."""

    kind: DensityKind
    grid_size: int
    finest_scale: int | None
    shear: ShearIndex | None
    cone: Cone | None
    exponent: float
    constant: float
    table: NDArray[np.float64] = field(repr=False)

    def probability(self, n: tuple[int, int]) -> float:
        """Normalized mass at centered frequency n.

        Raises:
            ValueError: If n lies outside Omega_J
        """
        require_in_domain(n, self.grid_size)
        return float(self.table[n[0] % self.grid_size, n[1] % self.grid_size])

    @property
    def flat(self) -> NDArray[np.float64]:
        return self.table.ravel()


def require_in_domain(n: tuple[int, int], grid_size: int) -> None:
    low, high = -(grid_size // 2), (grid_size + 1) // 2
    if not (low <= n[0] < high and low <= n[1] < high):
        raise ValueError(f"Frequency {n} lies outside Omega_J = [{low}, {high})^2")


def _oriented_mesh(grid_size: int, cone: Cone | None) -> tuple[NDArray[np.int64], NDArray[np.int64]]:
    n1, n2 = frequency_mesh(grid_size)
    if cone == Cone.VERTICAL:
        return n2, n1
    return n1, n2


def _weights(
    kind: DensityKind,
    grid_size: int,
    finest_scale: int | None,
    shear: ShearIndex | None,
    cone: Cone | None,
    exponent: float,
) -> NDArray[np.float64]:
    n1, n2 = _oriented_mesh(grid_size, cone)
    if kind == DensityKind.RADIAL:
        return radial_weight(n1, n2, exponent)
    if finest_scale is None or shear is None:
        raise ValueError(f"{kind.value} density needs a finest scale and a shear")
    if kind == DensityKind.CONTINUUM:
        return continuum_weight(finest_scale, float(shear), n1, n2)
    return discrete_weight(finest_scale, float(shear), n1, n2, exponent)


def build_density(
    kind: DensityKind,
    grid_size: int,
    finest_scale: int | None = None,
    shear: ShearIndex | None = None,
    cone: Cone | None = Cone.HORIZONTAL,
    exponent: float | None = None,
) -> SamplingDensity:
    """Build and normalize a density over the full centered N x N grid.

    Args:
        kind: Density family
        grid_size: Grid side N
        finest_scale: J (directional kinds only)
        shear: Shear s (directional kinds only)
        cone: Cone orientation; vertical swaps n1 and n2
        exponent: Decay exponent; defaults to the configured value for the kind

    Returns:
        Normalized SamplingDensity
    """
    if exponent is None:
        settings = get_settings()
        exponent = settings.radial_exponent if kind == DensityKind.RADIAL else settings.density_exponent
    return _cached_density(kind, grid_size, finest_scale, shear, cone, exponent)


@lru_cache(maxsize=128)
def _cached_density(
    kind: DensityKind,
    grid_size: int,
    finest_scale: int | None,
    shear: ShearIndex | None,
    cone: Cone | None,
    exponent: float,
) -> SamplingDensity:
    weights = _weights(kind, grid_size, finest_scale, shear, cone, exponent)
    constant = normalize(weights)
    table = weights * constant
    table.setflags(write=False)
    return SamplingDensity(
        kind=kind,
        grid_size=grid_size,
        finest_scale=finest_scale,
        shear=shear,
        cone=cone,
        exponent=exponent,
        constant=constant,
        table=table,
    )


def density_continuum(
    finest_scale: int,
    shear: ShearIndex,
    n: tuple[int, int],
    grid_size: int,
    cone: Cone = Cone.HORIZONTAL,
) -> float:
    """Normalized continuum density p_{J,s}(n) over the centered N x N grid.

    Raises:
        ValueError: If n lies outside Omega_J
    """
    require_in_domain(n, grid_size)
    return build_density(DensityKind.CONTINUUM, grid_size, finest_scale, shear, cone).probability(n)


def density_discrete(
    finest_scale: int,
    shear: ShearIndex,
    n: tuple[int, int],
    grid_size: int,
    cone: Cone = Cone.HORIZONTAL,
    exponent: float | None = None,
) -> float:
    """Normalized discrete density p_{J,s}(n) over the centered N x N grid.

    Raises:
        ValueError: If n lies outside Omega_J
    """
    require_in_domain(n, grid_size)
    density = build_density(DensityKind.DISCRETE, grid_size, finest_scale, shear, cone, exponent)
    return density.probability(n)
