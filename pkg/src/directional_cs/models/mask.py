"""Sampling mask models."""

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, Field, field_validator, model_validator

from directional_cs.config.standards import (
    MASK_FORMAT_VERSION,
    Cone,
    DensityKind,
    DrawPolicy,
)
from directional_cs.models.shear import ShearIndex, ShearKey


class MaskEntry(BaseModel):
    """Points drawn for one (shear, cone) pair; both are None for the radial baseline."""

    shear: ShearIndex | None = None
    cone: Cone | None = None
    points: list[tuple[int, int]] = Field(default_factory=list)

    @field_validator("points")
    @classmethod
    def sort_points(cls, points: list[tuple[int, int]]) -> list[tuple[int, int]]:
        """Keep points sorted lexicographically and reject duplicates."""
        ordered = sorted(points)
        for previous, current in zip(ordered, ordered[1:], strict=False):
            if previous == current:
                raise ValueError(f"Duplicate mask point {current}")
        return ordered

    @property
    def key(self) -> ShearKey | None:
        if self.shear is None or self.cone is None:
            return None
        return ShearKey(shear=self.shear, cone=self.cone)

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON output."""
        entry: dict = {}
        if self.shear is not None:
            entry.update(self.shear.to_dict())
        if self.cone is not None:
            entry["cone"] = self.cone.value
        entry["points"] = [[n1, n2] for n1, n2 in self.points]
        return entry

    @classmethod
    def from_dict(cls, data: dict) -> "MaskEntry":
        shear = ShearIndex(q=data["q"], level=data["level"]) if "q" in data else None
        cone = Cone(data["cone"]) if "cone" in data else None
        points = [(int(n1), int(n2)) for n1, n2 in data.get("points", [])]
        return cls(shear=shear, cone=cone, points=points)


class SamplingMask(BaseModel):
    """Per-shear frequency point sets Delta_{J,s} on the centered N x N grid."""

    grid_size: int = Field(ge=1)
    finest_scale: int | None = Field(default=None, ge=1)
    rho: float = 0.05
    seed: int = 0
    ratio: float | None = Field(default=None, gt=0.0, le=1.0)
    per_shear_m: int | dict[str, int] | None = None
    density_kind: DensityKind = DensityKind.DISCRETE
    exponent: float = 5.0
    draw_policy: DrawPolicy = DrawPolicy.IID_DEDUP
    entries: list[MaskEntry] = Field(default_factory=list)

    @model_validator(mode="after")
    def validate_points_in_grid(self) -> "SamplingMask":
        """Every point must lie in the centered grid [-N/2, N/2)^2."""
        low, high = -(self.grid_size // 2), (self.grid_size + 1) // 2
        for entry in self.entries:
            for n1, n2 in entry.points:
                if not (low <= n1 < high and low <= n2 < high):
                    raise ValueError(
                        f"Mask point {(n1, n2)} outside the centered {self.grid_size}-grid"
                    )
        return self

    @property
    def is_empty(self) -> bool:
        return all(not entry.points for entry in self.entries)

    def union_points(self) -> list[tuple[int, int]]:
        """Sorted union of all entries' points (Delta_J)."""
        union: set[tuple[int, int]] = set()
        for entry in self.entries:
            union.update(entry.points)
        return sorted(union)

    @property
    def cardinality(self) -> int:
        return len(self.union_points())

    @property
    def total_draws(self) -> int:
        """Sum of per-entry sizes, i.e. sum_s #Delta_{J,s}."""
        return sum(len(entry.points) for entry in self.entries)

    def indicator(self) -> NDArray[np.bool_]:
        """Boolean N x N array in storage layout (DC at index (0, 0))."""
        n = self.grid_size
        selected = np.zeros((n, n), dtype=bool)
        points = self.union_points()
        if points:
            coords = np.asarray(points, dtype=np.int64) % n
            selected[coords[:, 0], coords[:, 1]] = True
        return selected

    def to_dict(self) -> dict:
        """Convert to the mask JSON schema."""
        return {
            "version": MASK_FORMAT_VERSION,
            "N": self.grid_size,
            "J": self.finest_scale,
            "rho": self.rho,
            "seed": self.seed,
            "ratio_or_per_shear_m": self.ratio if self.ratio is not None else self.per_shear_m,
            "density": self.density_kind.value,
            "exponent": self.exponent,
            "draw_policy": self.draw_policy.value,
            "cardinality": self.cardinality,
            "shears": [entry.to_dict() for entry in self.entries],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SamplingMask":
        """Parse the mask JSON schema.

        Raises:
            ValueError: If the version is unsupported or fields are invalid
        """
        version = data.get("version")
        if version != MASK_FORMAT_VERSION:
            raise ValueError(f"Unsupported mask version {version!r}")
        amount = data.get("ratio_or_per_shear_m")
        ratio = amount if isinstance(amount, float) else None
        per_shear_m = amount if isinstance(amount, int | dict) else None
        return cls(
            grid_size=data["N"],
            finest_scale=data.get("J"),
            rho=data.get("rho", 0.05),
            seed=data.get("seed", 0),
            ratio=ratio,
            per_shear_m=per_shear_m,
            density_kind=DensityKind(data.get("density", DensityKind.DISCRETE.value)),
            exponent=data.get("exponent", 5.0),
            draw_policy=DrawPolicy(data.get("draw_policy", DrawPolicy.IID_DEDUP.value)),
            entries=[MaskEntry.from_dict(entry) for entry in data.get("shears", [])],
        )
