"""Pydantic model for cartoon phantom specifications."""

import math

from pydantic import BaseModel, Field, model_validator

from directional_cs.config.standards import PhantomKind
from directional_cs.models.grid import is_power_of_two

# Quadratic polynomial coefficients (c, cx, cy, cxx, cxy, cyy) in unit-square coordinates
Polynomial = tuple[float, float, float, float, float, float]

ZERO_POLYNOMIAL: Polynomial = (0.0, 0.0, 0.0, 0.0, 0.0, 0.0)

C2_BOUND = 1.0


def _quadratic_sup(poly: Polynomial) -> float:
    """Exact max |p| over [0, 1]^2: corners, edge vertices and the interior critical point."""
    c, cx, cy, cxx, cxy, cyy = poly

    def value(x: float, y: float) -> float:
        return c + cx * x + cy * y + cxx * x * x + cxy * x * y + cyy * y * y

    points = [(0.0, 0.0), (0.0, 1.0), (1.0, 0.0), (1.0, 1.0)]
    for edge in (0.0, 1.0):
        if cyy != 0.0:
            points.append((edge, -(cy + cxy * edge) / (2 * cyy)))
        if cxx != 0.0:
            points.append((-(cx + cxy * edge) / (2 * cxx), edge))
    det = 4 * cxx * cyy - cxy * cxy
    if det != 0.0:
        points.append(((cy * cxy - 2 * cx * cyy) / det, (cx * cxy - 2 * cxx * cy) / det))
    return max(abs(value(x, y)) for x, y in points if 0.0 <= x <= 1.0 and 0.0 <= y <= 1.0)


def c2_norm(poly: Polynomial) -> float:
    """max over |alpha| <= 2 of sup |d^alpha p| on [0, 1]^2."""
    _, cx, cy, cxx, cxy, cyy = poly
    gradient = max(
        abs(first + second * x + third * y)
        for first, second, third in ((cx, 2 * cxx, cxy), (cy, cxy, 2 * cyy))
        for x in (0.0, 1.0)
        for y in (0.0, 1.0)
    )
    return max(_quadratic_sup(poly), gradient, 2 * abs(cxx), abs(cxy), 2 * abs(cyy))


class PhantomSpec(BaseModel):
    """Cartoon-like image f = f0 + f1 * chi_B on [0, 1]^2."""

    kind: PhantomKind = PhantomKind.DISK
    grid_size: int = Field(default=256, description="Raster side N (power of two)")
    center: tuple[float, float] = Field(
        default=(0.5, 0.5),
        description="Region center (x, y) in normalized coordinates",
    )
    radii: tuple[float, float] = Field(
        default=(0.25, 0.25),
        description="Semi-axes (a, b); disks use a",
    )
    rotation: float = Field(default=0.0, description="Ellipse rotation in radians")
    background: Polynomial = Field(
        default=ZERO_POLYNOMIAL,
        description="Smooth background f0 coefficients (c, cx, cy, cxx, cxy, cyy)",
    )
    interior: Polynomial = Field(
        default=ZERO_POLYNOMIAL,
        description="Smooth interior variation added to the jump inside B",
    )
    jump: float = Field(default=1.0, description="Interior jump amplitude")

    @model_validator(mode="after")
    def validate_geometry(self) -> "PhantomSpec":
        """Ensure a power-of-two raster, a region strictly inside [0, 1]^2 and C^2 norms <= 1."""
        if not is_power_of_two(self.grid_size):
            raise ValueError(f"grid_size must be a power of two, got {self.grid_size}")
        a, b = self.semi_axes
        if a <= 0 or b <= 0:
            raise ValueError(f"Radii must be positive, got {self.radii}")
        half_x, half_y = self.half_extents
        cx, cy = self.center
        if cx - half_x <= 0 or cx + half_x >= 1 or cy - half_y <= 0 or cy + half_y >= 1:
            raise ValueError(
                f"Region B escapes [0, 1]^2: center {self.center}, extents ({half_x:.4f}, {half_y:.4f})"
            )
        for name, poly in (("background", self.background), ("interior", self.inside_polynomial)):
            norm = c2_norm(poly)
            if norm > C2_BOUND + 1e-12:
                raise ValueError(f"C^2 norm of the {name} part is {norm:.4g}, must not exceed {C2_BOUND:g}")
        return self

    @property
    def inside_polynomial(self) -> Polynomial:
        """f1 = jump + interior as one polynomial."""
        return (self.jump + self.interior[0], *self.interior[1:])  # type: ignore[return-value]

    @property
    def semi_axes(self) -> tuple[float, float]:
        if self.kind == PhantomKind.DISK:
            return self.radii[0], self.radii[0]
        return self.radii

    @property
    def half_extents(self) -> tuple[float, float]:
        """Half-widths of the axis-aligned bounding box of B."""
        a, b = self.semi_axes
        theta = 0.0 if self.kind == PhantomKind.DISK else self.rotation
        c, s = math.cos(theta), math.sin(theta)
        return math.hypot(a * c, b * s), math.hypot(a * s, b * c)

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON output."""
        return self.model_dump(mode="json")
