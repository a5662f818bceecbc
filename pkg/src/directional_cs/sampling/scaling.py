"""Growth check of the directional mask size across scales."""

from collections.abc import Sequence
from dataclasses import dataclass, field

from directional_cs.config.settings import get_settings
from directional_cs.config.standards import CARDINALITY_BAND, CARDINALITY_FLUCTUATION
from directional_cs.sampling.masks import draw_mask, theory_grid_size


def cardinality_bound(finest_scale: int, rho: float) -> float:
    """J * 2^(J/2 (1 + 6 rho))."""
    return finest_scale * 2.0 ** (finest_scale / 2 * (1 + 6 * rho))


@dataclass
class CardinalityScalingResult:
    """Result of a cardinality scaling check."""

    scales: list[int]
    counts: list[int]
    ratios: list[float]
    band: float
    nonincreasing: bool
    within_band: bool
    errors: list[str] = field(default_factory=list)

    @property
    def is_valid(self) -> bool:
        return self.nonincreasing

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON output."""
        return {
            "scales": self.scales,
            "counts": self.counts,
            "ratios": self.ratios,
            "band": self.band,
            "nonincreasing": self.nonincreasing,
            "within_band": self.within_band,
            "is_valid": self.is_valid,
            "errors": self.errors,
        }


def cardinality_scaling_check(
    scales: Sequence[int],
    counts: Sequence[int],
    rho: float | None = None,
    tolerance: float = CARDINALITY_FLUCTUATION,
    band_limit: float = CARDINALITY_BAND,
) -> CardinalityScalingResult:
    """Check that #Delta_J / (J 2^(J/2 (1 + 6 rho))) stays bounded as J grows.

    Args:
        scales: Finest scales J, ascending
        counts: Mask sizes for each J
        rho: Oversampling exponent (defaults to settings)
        tolerance: Allowed relative increase between consecutive ratios
        band_limit: Largest acceptable max/min ratio

    Returns:
        CardinalityScalingResult with the ratios and verdicts

    Raises:
        ValueError: If fewer than two scales are given or the lists differ in length
    """
    if len(scales) < 2:
        raise ValueError(f"Need at least two scales, got {len(scales)}")
    if len(scales) != len(counts):
        raise ValueError(f"Got {len(scales)} scales but {len(counts)} counts")
    rho = get_settings().rho if rho is None else rho

    ratios = [count / cardinality_bound(j, rho) for j, count in zip(scales, counts, strict=True)]
    errors = []
    for (j_prev, previous), (j_next, current) in zip(
        zip(scales, ratios, strict=True), zip(scales[1:], ratios[1:], strict=True), strict=False
    ):
        if current > previous * (1 + tolerance):
            errors.append(f"Ratio grows from {previous:.4f} (J={j_prev}) to {current:.4f} (J={j_next})")

    band = max(ratios) / min(ratios) if min(ratios) > 0 else float("inf")
    if band > band_limit:
        errors.append(f"Ratios spread by a factor {band:.3f} > {band_limit}")
    return CardinalityScalingResult(
        scales=list(scales),
        counts=list(counts),
        ratios=ratios,
        band=band,
        nonincreasing=not any(error.startswith("Ratio grows") for error in errors),
        within_band=band <= band_limit,
        errors=errors,
    )


def theoretical_mask_sizes(
    scales: Sequence[int],
    seed: int = 0,
    rho: float | None = None,
    *,
    union: bool = False,
    grid_size: int | None = None,
) -> list[int]:
    """Sizes of theoretical masks, one per finest scale J.

    By default the size is the sum of the per-shear set sizes, counting points
    shared between shears once per shear. ``union`` counts distinct points
    instead, which is never larger.

    Args:
        scales: Finest scales J
        seed: Master seed of every mask
        rho: Oversampling exponent (defaults to settings)
        union: Count #Delta_J as distinct points
        grid_size: Fixed grid side; N = 2^ceil(J (1 + rho)) per scale when omitted
    """
    rho = get_settings().rho if rho is None else rho
    sizes = []
    for finest_scale in scales:
        size = grid_size or max(theory_grid_size(finest_scale, rho), 4)
        mask = draw_mask(finest_scale, size, seed=seed, theoretical=True, rho=rho)
        sizes.append(mask.cardinality if union else mask.total_draws)
    return sizes
