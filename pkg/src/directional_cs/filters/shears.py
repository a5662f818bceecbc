"""Shear sets and the digital shear operator."""

import logging
from fractions import Fraction

import numpy as np

from directional_cs.config.standards import CONE_ORDER
from directional_cs.models.grid import ComplexGrid, Grid, require_square_power_of_two
from directional_cs.models.shear import ShearIndex, ShearKey
from directional_cs.spectral.transforms import centered_frequencies

logger = logging.getLogger(__name__)


def shear_set(finest_scale: int) -> list[ShearIndex]:
    """Shears {k / 2**(J/2) : |k| < 2**(J/2)} in minimal form, sorted ascending.

    Args:
        finest_scale: Even finest scale J >= 2

    Returns:
        Sorted list of distinct shear indices

    Raises:
        ValueError: If J is odd or not positive
    """
    if finest_scale < 2 or finest_scale % 2:
        raise ValueError(f"Finest scale J must be a positive even integer, got {finest_scale}")
    denominator = 2 ** (finest_scale // 2)
    return [
        ShearIndex.from_value(Fraction(k, denominator))
        for k in range(-denominator + 1, denominator)
    ]


def shear_keys(finest_scale: int) -> list[ShearKey]:
    """All (shear, cone) pairs in the fixed merge order: cone, then s ascending."""
    shears = shear_set(finest_scale)
    return [ShearKey(shear=shear, cone=cone) for cone in CONE_ORDER for shear in shears]


def digital_shear(u: Grid, shear: ShearIndex, inverse: bool = False) -> ComplexGrid:
    """Apply the digital shear S_s (or its inverse) to a square grid.

    The column at centered position x2 is cyclically advanced along axis 0
    by s * x2, so that F(S_s u)(xi) = F(u)(xi1, xi2 - s xi1). Integer
    advances are exact index permutations; fractional ones use a
    linear-phase ramp along axis 0 (band-limited interpolation). Either
    way the operator is unitary.

    Args:
        u: Square grid with power-of-two side
        shear: Shear parameter s
        inverse: Apply S_s^{-1} instead

    Returns:
        Sheared grid
    """
    size = require_square_power_of_two(u.shape, "sheared grid")
    data = np.asarray(u.data, dtype=np.complex128)
    if shear.q == 0:
        return ComplexGrid(data)

    value = -shear.value if inverse else shear.value
    positions = centered_frequencies(size)

    if value.denominator == 1:
        advance = positions * int(value)
        rows = (np.arange(size)[:, None] + advance[None, :]) % size
        return ComplexGrid(data[rows, np.arange(size)[None, :]])

    advance = positions * float(value)
    ramp = np.exp(2j * np.pi * np.outer(centered_frequencies(size), advance) / size)
    return ComplexGrid(np.fft.ifft(np.fft.fft(data, axis=0) * ramp, axis=0))
