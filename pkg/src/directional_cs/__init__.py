"""Directional CS.

Directional sampling and reconstruction from subsampled Fourier data using
dualizable shearlet-style filter banks.
"""

__version__ = "0.1.0"
