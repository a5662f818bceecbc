"""Pytest configuration and fixtures."""

import numpy as np
import pytest

from directional_cs.models.grid import RealGrid


@pytest.fixture(autouse=True)
def isolated_env(monkeypatch: pytest.MonkeyPatch) -> None:
    """Drop DIRCS_* and CIFG_SEED overrides so settings fall back to defaults."""
    import os

    for name in list(os.environ):
        if name.startswith("DIRCS_"):
            monkeypatch.delenv(name, raising=False)
    monkeypatch.delenv("CIFG_SEED", raising=False)


@pytest.fixture(autouse=True)
def clear_caches() -> None:
    """Clear all LRU caches between tests."""
    from directional_cs.config.settings import get_settings
    from directional_cs.filters.registry import get_filter_registry
    from directional_cs.sampling.densities import _cached_density

    get_settings.cache_clear()
    get_filter_registry.cache_clear()
    _cached_density.cache_clear()


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator for reproducible random inputs."""
    return np.random.default_rng(20240601)


@pytest.fixture
def random_image(rng: np.random.Generator) -> RealGrid:
    """Random 32 x 32 image in [0, 1]."""
    return RealGrid(rng.random((32, 32)))
