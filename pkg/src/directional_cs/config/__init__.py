"""Configuration module for Directional CS."""

from directional_cs.config.settings import Settings, get_settings
from directional_cs.config.standards import (
    CONE_ORDER,
    Cone,
    DensityKind,
    DrawPolicy,
    PhantomKind,
    SchemeKind,
    directional_scheme_id,
    parse_scheme,
    valid_scheme_ids,
)

__all__ = [
    "Settings",
    "get_settings",
    "CONE_ORDER",
    "Cone",
    "DensityKind",
    "DrawPolicy",
    "PhantomKind",
    "SchemeKind",
    "directional_scheme_id",
    "parse_scheme",
    "valid_scheme_ids",
]
