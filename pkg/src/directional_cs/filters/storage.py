"""Filter-set persistence: a directory of CIFG spectra plus a JSON manifest."""

import json
import logging
from pathlib import Path

from directional_cs.config.standards import FILTER_MANIFEST_NAME, FILTER_MANIFEST_VERSION, Cone
from directional_cs.filters.directional import (
    DirectionalFilter,
    DirectionalFilterSet,
    FilterBankError,
)
from directional_cs.models.grid import ComplexGrid
from directional_cs.models.shear import ShearIndex, ShearKey
from directional_cs.spectral.io import read_grid, write_grid

logger = logging.getLogger(__name__)


def _file_stem(index: int, key: ShearKey) -> str:
    return f"{index:02d}_{key.cone.value}_{key.shear.q}_{key.shear.level}"


def save_filter_set(filters: DirectionalFilterSet, directory: Path) -> Path:
    """Write spectra, duals and ``manifest.json`` into ``directory``.

    Returns:
        Path of the written manifest
    """
    directory.mkdir(parents=True, exist_ok=True)
    entries = []
    for index, entry in enumerate(filters):
        stem = _file_stem(index, entry.key)
        write_grid(directory / f"{stem}.cifg", entry.spectrum)
        write_grid(directory / f"{stem}_dual.cifg", entry.dual)
        entries.append({**entry.key.to_dict(), "file": f"{stem}.cifg", "dual": f"{stem}_dual.cifg"})

    manifest = {"version": FILTER_MANIFEST_VERSION, **filters.manifest(), "shears": entries}
    manifest_path = directory / FILTER_MANIFEST_NAME
    manifest_path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    logger.info("Saved %d filters to %s", len(filters), directory)
    return manifest_path


def load_filter_set(directory: Path) -> DirectionalFilterSet:
    """Read a filter set written by ``save_filter_set``.

    Raises:
        FilterBankError: If the manifest is missing, has another version or lists non-complex grids
    """
    manifest_path = directory / FILTER_MANIFEST_NAME
    if not manifest_path.exists():
        raise FilterBankError(f"No {FILTER_MANIFEST_NAME} in {directory}")
    manifest = json.loads(manifest_path.read_text(encoding="utf-8"))
    if manifest.get("version") != FILTER_MANIFEST_VERSION:
        raise FilterBankError(f"Unsupported filter manifest version {manifest.get('version')!r}")

    filters = []
    for item in manifest["shears"]:
        key = ShearKey(
            shear=ShearIndex(q=item["q"], level=item["level"]),
            cone=Cone(item["cone"]),
        )
        spectrum = read_grid(directory / item["file"])
        dual = read_grid(directory / item["dual"])
        if not isinstance(spectrum, ComplexGrid) or not isinstance(dual, ComplexGrid):
            raise FilterBankError(f"Filter {key.label()} is not stored as a complex grid")
        filters.append(DirectionalFilter(key=key, spectrum=spectrum, dual=dual))

    frequency = manifest.get("C_low_frequency", [0, 0])
    return DirectionalFilterSet(
        grid_size=manifest["N"],
        finest_scale=manifest["J"],
        filters=tuple(filters),
        lower_bound=float(manifest["C_low"]),
        lower_bound_frequency=(int(frequency[0]), int(frequency[1])),
    )
