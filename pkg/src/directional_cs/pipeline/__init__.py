"""Measurement, per-shear reconstruction, baselines and the comparison harness."""

from directional_cs.pipeline.compare import (
    compare,
    comparison_csv,
    comparison_json,
    run_scheme,
    scheme_mask,
)
from directional_cs.pipeline.measurement import (
    MeasurementSet,
    PipelineError,
    forward_measure,
    read_measurements,
    write_measurements,
)
from directional_cs.pipeline.operators import (
    fourier_operator,
    shear_operator,
    shearlet_frame,
    sheared_analysis,
    sheared_synthesis,
    sheared_wavelet_atoms,
    sparsifier_scale,
    wavelet_operator,
)
from directional_cs.pipeline.reconstruct import (
    combine_shears,
    reconstruct_directional,
    reconstruct_shearlet,
    reconstruct_wavelet,
    reconstruction_options,
    shear_residuals,
)

__all__ = [
    "compare",
    "comparison_csv",
    "comparison_json",
    "run_scheme",
    "scheme_mask",
    "MeasurementSet",
    "PipelineError",
    "forward_measure",
    "read_measurements",
    "write_measurements",
    "fourier_operator",
    "shear_operator",
    "shearlet_frame",
    "sheared_analysis",
    "sheared_synthesis",
    "sheared_wavelet_atoms",
    "sparsifier_scale",
    "wavelet_operator",
    "combine_shears",
    "reconstruct_directional",
    "reconstruct_shearlet",
    "reconstruct_wavelet",
    "reconstruction_options",
    "shear_residuals",
]
