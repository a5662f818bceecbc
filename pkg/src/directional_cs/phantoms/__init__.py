"""Cartoon-like phantoms."""

from directional_cs.phantoms.render import (
    PhantomError,
    cell_centers,
    default_spec,
    downsample,
    evaluate_polynomial,
    load_spec,
    region_indicator,
    render,
)

__all__ = [
    "PhantomError",
    "cell_centers",
    "default_spec",
    "downsample",
    "evaluate_polynomial",
    "load_spec",
    "region_indicator",
    "render",
]
