"""Random sampling masks and the mask operator.

Each (shear, cone) pair owns a random stream seeded from a SHA-256 hash of
(seed, cone, q, level). Points are ranked by exponential keys E / p(n); the
first m ranks are distributed like i.i.d. draws from p with duplicates
rejected, drawing always terminates, and masks with a larger m contain
the smaller ones under the same seed.
"""

import hashlib
import logging
import math
from collections.abc import Sequence
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from numpy.typing import NDArray

from directional_cs.config.settings import get_settings
from directional_cs.config.standards import DensityKind, DrawPolicy
from directional_cs.filters.shears import shear_keys
from directional_cs.models.grid import ComplexGrid
from directional_cs.models.mask import MaskEntry, SamplingMask
from directional_cs.models.shear import ShearIndex, ShearKey
from directional_cs.sampling.densities import SamplingDensity, build_density
from directional_cs.spectral.transforms import centered_frequencies

logger = logging.getLogger(__name__)


class SamplingError(Exception):
    """Raised when a mask cannot be drawn with the requested counts."""

    def __init__(self, message: str, requested: int = 0, available: int = 0):
        super().__init__(message)
        self.requested = requested
        self.available = available


def stream_seed(seed: int, key: ShearKey | None) -> int:
    """Stable 64-bit seed for the random stream of one (shear, cone) pair."""
    label = "radial" if key is None else f"{key.cone.value}:{key.shear.q}:{key.shear.level}"
    digest = hashlib.sha256(f"{seed}|{label}".encode()).digest()
    return int.from_bytes(digest[:8], "little")


def draw_order(density: SamplingDensity, rng: np.random.Generator) -> NDArray[np.int64]:
    """Flat storage indices ranked by exponential keys E / p (most likely first)."""
    probabilities = density.flat
    keys = np.full(probabilities.shape, np.inf)
    positive = probabilities > 0
    keys[positive] = rng.exponential(size=int(np.count_nonzero(positive))) / probabilities[positive]
    return np.argsort(keys, kind="stable")


def draw_iid(density: SamplingDensity, count: int, seed: int) -> NDArray[np.int64]:
    """Raw i.i.d. draws (flat storage indices, duplicates kept)."""
    rng = np.random.default_rng(seed)
    return rng.choice(density.flat.size, size=count, replace=True, p=density.flat)


def total_variation(draws: NDArray[np.int64], density: SamplingDensity) -> float:
    """Total-variation distance between the empirical histogram of draws and the density."""
    if draws.size == 0:
        raise ValueError("Cannot compare an empty sample to a density")
    histogram = np.bincount(draws, minlength=density.flat.size) / draws.size
    return 0.5 * float(np.sum(np.abs(histogram - density.flat)))


def theoretical_count(finest_scale: int, shear: ShearIndex, rho: float) -> int:
    """m_{J,s} = max(1, round(2^((J - j0)/2) * 2^(3 J rho))) with j0 generating s."""
    exponent = (finest_scale - shear.generating_scale) / 2 + 3 * finest_scale * rho
    return max(1, round(2.0**exponent))


def theory_grid_size(finest_scale: int, rho: float) -> int:
    """N = 2^ceil(J (1 + rho)), the grid used by theory-driven checks."""
    return 2 ** math.ceil(finest_scale * (1 + rho))


def _points(indices: NDArray[np.int64], grid_size: int) -> list[tuple[int, int]]:
    freqs = centered_frequencies(grid_size)
    rows, cols = np.divmod(indices, grid_size)
    return [(int(freqs[r]), int(freqs[c])) for r, c in zip(rows, cols, strict=True)]


def _orders(
    keys: Sequence[ShearKey],
    grid_size: int,
    finest_scale: int,
    seed: int,
    exponent: float,
    threads: int,
) -> list[NDArray[np.int64]]:
    def order_for(key: ShearKey) -> NDArray[np.int64]:
        density = build_density(
            DensityKind.DISCRETE, grid_size, finest_scale, key.shear, key.cone, exponent
        )
        return draw_order(density, np.random.default_rng(stream_seed(seed, key)))

    if threads <= 1:
        return [order_for(key) for key in keys]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(order_for, keys))


def _union_size(orders: list[NDArray[np.int64]], count: int) -> int:
    return int(np.unique(np.concatenate([order[:count] for order in orders])).size)


def _count_for_ratio(orders: list[NDArray[np.int64]], target: int, available: int) -> int:
    """Smallest equal per-shear count whose union reaches ``target`` points."""
    low, high = 1, available
    while low < high:
        middle = (low + high) // 2
        if _union_size(orders, middle) >= target:
            high = middle
        else:
            low = middle + 1
    return low


def draw_mask(
    finest_scale: int,
    grid_size: int,
    per_shear_count: int | None = None,
    seed: int = 0,
    *,
    ratio: float | None = None,
    theoretical: bool = False,
    rho: float | None = None,
    exponent: float | None = None,
    threads: int = 1,
) -> SamplingMask:
    """Draw the directional mask Delta_J = union over (s, cone) of Delta_{J,s}.

    Exactly one sizing mode applies: an equal ``per_shear_count``, a target
    ``ratio`` of the N^2 grid, or the ``theoretical`` counts m_{J,s}.

    Args:
        finest_scale: Even finest scale J
        grid_size: Grid side N; Omega_J is the full centered N x N grid
        per_shear_count: Equal number m of distinct points per (shear, cone)
        seed: Master seed
        ratio: Target fraction of kept frequencies in (0, 1]
        theoretical: Use m_{J,s} = max(1, round(2^((J - j0)/2) 2^(3 J rho)))
        rho: Oversampling exponent (defaults to settings)
        exponent: Discrete density exponent (defaults to settings)
        threads: Concurrent per-shear streams

    Returns:
        SamplingMask with one entry per (shear, cone), cone-major, s ascending

    Raises:
        ValueError: If no or several sizing modes are given, or ratio is outside (0, 1]
        SamplingError: If a requested count exceeds #Omega_J
    """
    modes = sum([per_shear_count is not None, ratio is not None, theoretical])
    if modes != 1:
        raise ValueError("Give exactly one of per_shear_count, ratio or theoretical")
    if ratio is not None and not 0.0 < ratio <= 1.0:
        raise ValueError(f"ratio must lie in (0, 1], got {ratio}")
    if per_shear_count is not None and per_shear_count < 1:
        raise ValueError(f"per_shear_count must be at least 1, got {per_shear_count}")

    settings = get_settings()
    rho = settings.rho if rho is None else rho
    exponent = settings.density_exponent if exponent is None else exponent
    available = grid_size * grid_size
    keys = shear_keys(finest_scale)

    counts: dict[ShearKey, int]
    if per_shear_count is not None:
        counts = dict.fromkeys(keys, per_shear_count)
    elif theoretical:
        counts = {key: theoretical_count(finest_scale, key.shear, rho) for key in keys}
    else:
        counts = {}

    worst = max(counts.values(), default=0)
    if worst > available:
        raise SamplingError(
            f"Requested {worst} points per shear but Omega_J has only {available}",
            requested=worst,
            available=available,
        )

    orders = _orders(keys, grid_size, finest_scale, seed, exponent, threads)
    if ratio is not None:
        target = math.floor(ratio * available)
        count = _count_for_ratio(orders, target, available) if target > 0 else 0
        counts = dict.fromkeys(keys, count)
        logger.debug("Ratio %.4f needs %d points per shear on N=%d", ratio, count, grid_size)

    entries = [
        MaskEntry(
            shear=key.shear,
            cone=key.cone,
            points=_points(order[: counts[key]], grid_size),
        )
        for key, order in zip(keys, orders, strict=True)
    ]

    amount: int | dict[str, int] | None
    if theoretical:
        amount = {key.label(): counts[key] for key in keys}
    elif ratio is not None:
        amount = None
    else:
        amount = per_shear_count

    mask = SamplingMask(
        grid_size=grid_size,
        finest_scale=finest_scale,
        rho=rho,
        seed=seed,
        ratio=ratio,
        per_shear_m=amount,
        density_kind=DensityKind.DISCRETE,
        exponent=exponent,
        draw_policy=DrawPolicy.IID_DEDUP,
        entries=entries,
    )
    logger.info(
        "Drew directional mask J=%d N=%d seed=%d: %d points (%.2f%%)",
        finest_scale,
        grid_size,
        seed,
        mask.cardinality,
        100.0 * mask.cardinality / available,
    )
    return mask


def baseline_radial_mask(
    grid_size: int, ratio: float, seed: int = 0, exponent: float | None = None
) -> SamplingMask:
    """Draw floor(ratio N^2) distinct points from the density 1 / (1 + ||n||)^e.

    Raises:
        ValueError: If ratio is outside (0, 1]
    """
    if not 0.0 < ratio <= 1.0:
        raise ValueError(f"ratio must lie in (0, 1], got {ratio}")
    density = build_density(DensityKind.RADIAL, grid_size, cone=None, exponent=exponent)
    count = math.floor(ratio * grid_size * grid_size)
    order = draw_order(density, np.random.default_rng(stream_seed(seed, None)))
    mask = SamplingMask(
        grid_size=grid_size,
        finest_scale=None,
        rho=get_settings().rho,
        seed=seed,
        ratio=ratio,
        density_kind=DensityKind.RADIAL,
        exponent=density.exponent,
        draw_policy=DrawPolicy.IID_DEDUP,
        entries=[MaskEntry(points=_points(order[:count], grid_size))],
    )
    logger.info("Drew radial mask N=%d seed=%d: %d points", grid_size, seed, count)
    return mask


def mask_apply(spectrum: ComplexGrid, mask: SamplingMask) -> ComplexGrid:
    """Projection P_Delta: keep the spectrum on mask points, zero elsewhere.

    Raises:
        ValueError: If the spectrum does not match the mask grid
    """
    expected = (mask.grid_size, mask.grid_size)
    if spectrum.shape != expected:
        raise ValueError(f"Spectrum shape {spectrum.shape} does not match mask grid {expected}")
    return ComplexGrid(np.where(mask.indicator(), spectrum.data, 0.0))
