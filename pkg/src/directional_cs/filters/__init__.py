"""Directional filter bank, digital shear and wavelet transforms."""

from directional_cs.filters.directional import (
    DirectionalFilter,
    DirectionalFilterSet,
    FilterBankError,
    build_directional_filters,
    dual_spectra,
)
from directional_cs.filters.registry import FilterBankRegistry, get_filter_registry
from directional_cs.filters.shears import digital_shear, shear_keys, shear_set
from directional_cs.filters.storage import load_filter_set, save_filter_set
from directional_cs.filters.wavelets import (
    WaveletCoefficients,
    WaveletPair,
    anisotropic_analysis,
    anisotropic_synthesis,
    awt_forward,
    awt_inverse,
    isotropic_analysis,
    isotropic_synthesis,
)
from directional_cs.filters.windows import ScaleWindows, build_scale_windows

__all__ = [
    "DirectionalFilter",
    "DirectionalFilterSet",
    "FilterBankError",
    "build_directional_filters",
    "dual_spectra",
    "FilterBankRegistry",
    "get_filter_registry",
    "digital_shear",
    "shear_keys",
    "shear_set",
    "load_filter_set",
    "save_filter_set",
    "WaveletCoefficients",
    "WaveletPair",
    "anisotropic_analysis",
    "anisotropic_synthesis",
    "awt_forward",
    "awt_inverse",
    "isotropic_analysis",
    "isotropic_synthesis",
    "ScaleWindows",
    "build_scale_windows",
]
