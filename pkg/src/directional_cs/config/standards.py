"""Naming standards, identifiers and format constants."""

import re
from enum import Enum
from typing import Final


class Cone(str, Enum):
    """Frequency cone a directional filter or mask entry belongs to."""

    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


class DensityKind(str, Enum):
    """Sampling density families."""

    CONTINUUM = "continuum"
    DISCRETE = "discrete"
    RADIAL = "radial-baseline"


class DrawPolicy(str, Enum):
    """How mask points are drawn from a density."""

    IID_DEDUP = "iid-dedup"


class SchemeKind(str, Enum):
    """Reconstruction scheme families."""

    DIRECTIONAL = "directional"
    WAVELET_RADIAL = "wave01"
    WAVELET_DIRECTIONAL = "wave02"
    SHEARLET = "shear"


class PhantomKind(str, Enum):
    """Cartoon phantom geometries."""

    DISK = "disk"
    ELLIPSE = "ellipse"
    TWO_REGION_SMOOTH = "two-region-smooth"


# Cones are always iterated in this order so merged results are deterministic
CONE_ORDER: Final[tuple[Cone, ...]] = (Cone.HORIZONTAL, Cone.VERTICAL)

# Scheme ids
BASELINE_SCHEMES: Final[frozenset[str]] = frozenset(
    {
        SchemeKind.WAVELET_RADIAL.value,
        SchemeKind.WAVELET_DIRECTIONAL.value,
        SchemeKind.SHEARLET.value,
    }
)
DIRECTIONAL_SCHEME_PATTERN: Final[str] = r"^shear(\d{2,})$"
SUPPORTED_FINEST_SCALES: Final[tuple[int, ...]] = (2, 4, 6)

# Grid file format "CIFG v1"
CIFG_MAGIC: Final[bytes] = b"CIFG"
CIFG_VERSION: Final[int] = 1
CIFG_DTYPE_REAL: Final[int] = 0
CIFG_DTYPE_COMPLEX: Final[int] = 1
CIFG_HEADER_FORMAT: Final[str] = "<4sBBII"

# JSON artifact versions
MASK_FORMAT_VERSION: Final[int] = 1
FILTER_MANIFEST_VERSION: Final[int] = 1
FILTER_MANIFEST_NAME: Final[str] = "manifest.json"

# Numerical thresholds
FRAME_BOUND_FLOOR: Final[float] = 1e-8
ORACLE_MAX_ROWS: Final[int] = 16
ORACLE_MAX_COLUMNS: Final[int] = 32
ORACLE_MAX_SPARSITY: Final[int] = 4
ORACLE_FEASIBILITY: Final[float] = 1e-9
ORACLE_TIE_TOLERANCE: Final[float] = 1e-12
RIP_EXHAUSTIVE_MAX_COLUMNS: Final[int] = 24
RIP_EXHAUSTIVE_MAX_SPARSITY: Final[int] = 4
CARDINALITY_FLUCTUATION: Final[float] = 0.2
CARDINALITY_BAND: Final[float] = 1.5

# Comparison CSV columns
COMPARISON_COLUMNS: Final[tuple[str, ...]] = (
    "scheme",
    "ratio",
    "seed",
    "psnr_db",
    "seconds",
    "converged_shears",
)


def directional_filter_count(finest_scale: int) -> int:
    """Total number of directional filters over both cones for an even finest scale."""
    return 2 * (2 ** (finest_scale // 2 + 1) - 1)


def directional_scheme_id(finest_scale: int) -> str:
    """Scheme id of the directional scheme for a finest scale, e.g. J=4 -> 'shear14'."""
    return f"shear{directional_filter_count(finest_scale):02d}"


def valid_scheme_ids() -> list[str]:
    """All scheme ids understood by the pipeline."""
    directional = [directional_scheme_id(j) for j in SUPPORTED_FINEST_SCALES]
    return directional + sorted(BASELINE_SCHEMES)


def parse_scheme(scheme_id: str) -> tuple[SchemeKind, int | None]:
    """Parse a scheme id into its kind and, for directional schemes, the finest scale.

    Args:
        scheme_id: Scheme id such as 'shear06', 'shear14', 'shear', 'wave01' or 'wave02'

    Returns:
        Tuple of (scheme kind, finest scale or None for baselines)

    Raises:
        ValueError: If the id is not a known scheme
    """
    if scheme_id in BASELINE_SCHEMES:
        return SchemeKind(scheme_id), None

    match = re.match(DIRECTIONAL_SCHEME_PATTERN, scheme_id)
    if match:
        count = int(match.group(1))
        for finest_scale in SUPPORTED_FINEST_SCALES:
            if directional_filter_count(finest_scale) == count:
                return SchemeKind.DIRECTIONAL, finest_scale

    raise ValueError(
        f"Unknown scheme '{scheme_id}'. Valid schemes: {', '.join(valid_scheme_ids())}"
    )
