"""Filter-bank registry: lazily built, cached directional filter sets."""

import logging
import threading
from functools import lru_cache

from directional_cs.config.settings import get_settings
from directional_cs.filters.directional import DirectionalFilterSet, build_directional_filters
from directional_cs.filters.wavelets import WaveletPair

logger = logging.getLogger(__name__)


class FilterBankRegistry:
    """Registry that manages DirectionalFilterSet instances across grid configurations.

    Lazily builds filter sets per (N, J) and caches them, so repeated
    reconstructions on the same grid share one immutable bank.
    """

    def __init__(self, wavelet: str | None = None):
        """Initialize the filter-bank registry.

        Args:
            wavelet: PyWavelets name of the pair handed out by ``wavelet_pair``;
                the configured wavelet when omitted
        """
        self._wavelet = wavelet or get_settings().wavelet
        self._filter_sets: dict[tuple[int, int], DirectionalFilterSet] = {}
        self._pair: WaveletPair | None = None
        self._lock = threading.Lock()

    @property
    def configurations(self) -> list[tuple[int, int]]:
        """Return the (N, J) pairs built so far."""
        return sorted(self._filter_sets)

    def get_filters(self, grid_size: int, finest_scale: int) -> DirectionalFilterSet:
        """Get or build the filter set for an (N, J) configuration.

        Args:
            grid_size: Grid side N
            finest_scale: Even finest scale J

        Returns:
            Cached DirectionalFilterSet

        Raises:
            ValueError: If (N, J) is invalid
            FilterBankError: If construction fails
        """
        key = (grid_size, finest_scale)
        with self._lock:
            if key in self._filter_sets:
                logger.debug("Filter set cache hit for N=%d, J=%d", grid_size, finest_scale)
                return self._filter_sets[key]
            filters = build_directional_filters(grid_size, finest_scale)
            self._filter_sets[key] = filters
            return filters

    def wavelet_pair(self) -> WaveletPair:
        """Get the configured orthonormal wavelet pair."""
        if self._pair is None:
            self._pair = WaveletPair.from_name(self._wavelet)
        return self._pair

    def clear(self) -> None:
        """Drop all cached filter sets."""
        with self._lock:
            self._filter_sets.clear()


@lru_cache
def get_filter_registry() -> FilterBankRegistry:
    """Get cached filter-bank registry.

    Returns:
        FilterBankRegistry configured from application settings
    """
    return FilterBankRegistry(wavelet=get_settings().wavelet)
