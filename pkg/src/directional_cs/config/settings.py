"""Application settings using Pydantic Settings."""

from functools import lru_cache
from pathlib import Path

from pydantic import Field, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

# Get the path to the .env file relative to this module
_ENV_FILE = Path(__file__).parent.parent.parent.parent / ".env"


class Settings(BaseSettings):
    """Numerical defaults loaded from environment variables (prefix DIRCS_)."""

    model_config = SettingsConfigDict(
        env_prefix="DIRCS_",
        env_file=str(_ENV_FILE) if _ENV_FILE.exists() else None,
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Sampling
    rho: float = Field(
        default=0.05,
        gt=0.0,
        description="Oversampling exponent rho in (0, 1/12); sizes Omega_J and m_{J,s}",
    )
    density_exponent: float = Field(
        default=5.0,
        gt=0.0,
        description="Exponent of the discrete directional density",
    )
    radial_exponent: float = Field(
        default=2.0,
        gt=0.0,
        description="Exponent of the radial variable-density baseline",
    )

    # Transforms
    wavelet: str = Field(
        default="db4",
        description="PyWavelets name of the orthonormal pair used by the wavelet transforms",
    )

    sparsifier_scale: int | None = Field(
        default=None,
        ge=1,
        description="Depth of the anisotropic wavelet transform in directional reconstructions; "
        "None uses log2(N) - 2, never below J",
    )

    # Solver (library defaults)
    solver_max_iterations: int = Field(default=2000, ge=1)
    solver_relative_tolerance: float = Field(default=1e-9, gt=0.0)
    solver_residual_factor: float = Field(
        default=1e-7,
        gt=0.0,
        description="Absolute residual tolerance as a multiple of ||y||_2",
    )

    # Solver (image reconstructions)
    reconstruction_max_iterations: int = Field(default=500, ge=1)
    reconstruction_relative_tolerance: float = Field(default=1e-4, gt=0.0)

    # Reporting and execution
    psnr_peak: float = Field(default=1.0, gt=0.0)
    threads: int = Field(default=1, ge=1, description="Concurrent per-shear subproblems")
    log_level: str = Field(default="WARNING")

    @model_validator(mode="after")
    def validate_rho(self) -> "Settings":
        """Ensure rho stays in the admissible range (0, 1/12)."""
        if self.rho >= 1.0 / 12.0:
            raise ValueError(f"rho must lie in (0, 1/12), got {self.rho}")
        return self


@lru_cache
def get_settings() -> Settings:
    """Get cached application settings.

    Returns:
        Settings: Application settings instance
    """
    return Settings()
