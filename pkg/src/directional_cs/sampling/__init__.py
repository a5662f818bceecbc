"""Sampling densities, random masks and the mask operator."""

from directional_cs.sampling.densities import (
    SamplingDensity,
    build_density,
    continuum_weight,
    density_continuum,
    density_discrete,
    discrete_weight,
    normalize,
    radial_weight,
)
from directional_cs.sampling.masks import (
    SamplingError,
    baseline_radial_mask,
    draw_iid,
    draw_mask,
    draw_order,
    mask_apply,
    stream_seed,
    theoretical_count,
    theory_grid_size,
    total_variation,
)
from directional_cs.sampling.scaling import (
    CardinalityScalingResult,
    cardinality_bound,
    cardinality_scaling_check,
    theoretical_mask_sizes,
)

__all__ = [
    "SamplingDensity",
    "build_density",
    "continuum_weight",
    "density_continuum",
    "density_discrete",
    "discrete_weight",
    "normalize",
    "radial_weight",
    "SamplingError",
    "baseline_radial_mask",
    "draw_iid",
    "draw_mask",
    "draw_order",
    "mask_apply",
    "stream_seed",
    "theoretical_count",
    "theory_grid_size",
    "total_variation",
    "CardinalityScalingResult",
    "cardinality_bound",
    "cardinality_scaling_check",
    "theoretical_mask_sizes",
]
