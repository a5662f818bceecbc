"""Dyadic shear parameters."""

from fractions import Fraction

from pydantic import BaseModel, ConfigDict, Field, model_validator

from directional_cs.config.standards import Cone


class ShearIndex(BaseModel):
    """Dyadic shear s = q / 2**level with minimal level.

    ``level`` equals ceil(j0 / 2) for the generating scale j0 of the shear.
    """

    model_config = ConfigDict(frozen=True)

    q: int
    level: int = Field(ge=0)

    @model_validator(mode="after")
    def validate_minimal(self) -> "ShearIndex":
        """Ensure q is odd (or the zero shear) and |s| <= 1."""
        if self.q == 0:
            if self.level != 0:
                raise ValueError("The zero shear must have level 0")
            return self
        if self.q % 2 == 0:
            raise ValueError(f"q must be odd for a minimal representation, got {self.q}")
        if abs(self.q) > 2**self.level:
            raise ValueError(f"|q / 2**level| must not exceed 1, got {self.q}/{2**self.level}")
        return self

    @classmethod
    def from_value(cls, value: Fraction | int | str) -> "ShearIndex":
        """Build the minimal representation of a dyadic rational in [-1, 1].

        Raises:
            ValueError: If value is not dyadic or lies outside [-1, 1]
        """
        fraction = Fraction(value)
        denominator = fraction.denominator
        if denominator & (denominator - 1):
            raise ValueError(f"Shear {fraction} is not a dyadic rational")
        if abs(fraction) > 1:
            raise ValueError(f"Shear {fraction} lies outside [-1, 1]")
        if fraction == 0:
            return cls(q=0, level=0)
        return cls(q=fraction.numerator, level=denominator.bit_length() - 1)

    @property
    def value(self) -> Fraction:
        return Fraction(self.q, 2**self.level)

    @property
    def generating_scale(self) -> int:
        """Smallest scale j0 with ceil(j0 / 2) == level."""
        return 0 if self.level == 0 else 2 * self.level - 1

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return str(self.value)

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON output."""
        return {"q": self.q, "level": self.level}


class ShearKey(BaseModel):
    """A shear together with its cone; identifies one directional filter."""

    model_config = ConfigDict(frozen=True)

    shear: ShearIndex
    cone: Cone

    def sort_key(self) -> tuple[int, Fraction]:
        """Cone first (horizontal before vertical), then s ascending."""
        return (0 if self.cone == Cone.HORIZONTAL else 1, self.shear.value)

    def label(self) -> str:
        return f"{self.cone.value}:{self.shear}"

    def to_dict(self) -> dict:
        """Convert to dictionary for JSON output."""
        return {"q": self.shear.q, "level": self.shear.level, "cone": self.cone.value}
