"""Comparison harness: PSNR and runtime per (scheme, ratio, seed)."""

import csv
import io
import json
import logging
from collections.abc import Sequence

from directional_cs import __version__
from directional_cs.config.standards import COMPARISON_COLUMNS, SchemeKind, parse_scheme
from directional_cs.filters.registry import get_filter_registry
from directional_cs.models.grid import RealGrid, require_square_power_of_two
from directional_cs.models.mask import SamplingMask
from directional_cs.models.reports import ComparisonRow, ReconstructionReport, RunConfig
from directional_cs.models.solver import SolverOptions
from directional_cs.pipeline.measurement import forward_measure
from directional_cs.pipeline.reconstruct import (
    reconstruct_directional,
    reconstruct_shearlet,
    reconstruct_wavelet,
)
from directional_cs.sampling.masks import baseline_radial_mask, draw_mask

logger = logging.getLogger(__name__)

DEFAULT_BASELINE_SCALE = 4


def scheme_mask(
    scheme_id: str,
    grid_size: int,
    ratio: float,
    seed: int,
    baseline_scale: int = DEFAULT_BASELINE_SCALE,
    threads: int = 1,
) -> SamplingMask:
    """Mask a scheme samples with: radial for wave01, directional otherwise.

    The shear and wave02 baselines use the directional mask at ``baseline_scale``.

    Raises:
        ValueError: If the scheme id is unknown
    """
    kind, finest_scale = parse_scheme(scheme_id)
    if kind == SchemeKind.WAVELET_RADIAL:
        return baseline_radial_mask(grid_size, ratio, seed)
    scale = finest_scale if finest_scale is not None else baseline_scale
    return draw_mask(scale, grid_size, seed=seed, ratio=ratio, threads=threads)


def run_scheme(
    u: RealGrid,
    scheme_id: str,
    mask: SamplingMask,
    options: SolverOptions | None = None,
    threads: int = 1,
    config: dict | None = None,
    baseline_scale: int = DEFAULT_BASELINE_SCALE,
) -> tuple[RealGrid, ReconstructionReport]:
    """Measure ``u`` on ``mask`` and reconstruct with the scheme's sparsifier."""
    kind, finest_scale = parse_scheme(scheme_id)
    measurements = forward_measure(u, mask)
    registry = get_filter_registry()
    if kind == SchemeKind.DIRECTIONAL and finest_scale is not None:
        filters = registry.get_filters(measurements.grid_size, finest_scale)
        return reconstruct_directional(
            measurements,
            filters,
            options,
            pair=registry.wavelet_pair(),
            ground_truth=u,
            threads=threads,
            config=config,
        )
    if kind == SchemeKind.SHEARLET:
        filters = registry.get_filters(measurements.grid_size, mask.finest_scale or baseline_scale)
        return reconstruct_shearlet(
            measurements,
            filters,
            options,
            pair=registry.wavelet_pair(),
            ground_truth=u,
            config=config,
        )
    return reconstruct_wavelet(
        measurements,
        options,
        scheme=kind,
        depth=mask.finest_scale or baseline_scale,
        pair=registry.wavelet_pair(),
        ground_truth=u,
        config=config,
    )


def compare(
    u: RealGrid,
    schemes: Sequence[str],
    ratios: Sequence[float],
    seeds: Sequence[int],
    options: SolverOptions | None = None,
    threads: int = 1,
    baseline_scale: int = DEFAULT_BASELINE_SCALE,
) -> list[ComparisonRow]:
    """Run every (scheme, ratio, seed) combination on ``u``.

    Args:
        u: Ground-truth image
        schemes: Scheme ids (shearNN, shear, wave01, wave02)
        ratios: Sampling ratios in (0, 1]
        seeds: Mask seeds
        options: Solver options shared by every scheme
        threads: Concurrent per-shear subproblems
        baseline_scale: Finest scale of the shear and wave02 masks and of the baseline transforms

    Returns:
        Rows ordered by scheme, then ratio, then seed

    Raises:
        ValueError: If a list is empty or a scheme id is unknown
    """
    if not schemes or not ratios or not seeds:
        raise ValueError("compare needs at least one scheme, one ratio and one seed")
    for scheme_id in schemes:
        parse_scheme(scheme_id)
    size = require_square_power_of_two(u.shape, "image")

    rows = []
    for scheme_id in schemes:
        for ratio in ratios:
            for seed in seeds:
                mask = scheme_mask(scheme_id, size, ratio, seed, baseline_scale, threads)
                _, report = run_scheme(u, scheme_id, mask, options, threads, baseline_scale=baseline_scale)
                rows.append(
                    ComparisonRow(
                        scheme=scheme_id,
                        ratio=ratio,
                        seed=seed,
                        psnr_db=report.psnr_db if report.psnr_db is not None else float("nan"),
                        seconds=report.seconds,
                        converged_shears=report.converged_count,
                        total_shears=len(report.solves),
                    )
                )
                logger.info("%s ratio=%.3f seed=%d: %.2f dB", scheme_id, ratio, seed, rows[-1].psnr_db)
    return rows


def comparison_csv(rows: Sequence[ComparisonRow], config: RunConfig, timing: bool = False) -> str:
    """CSV with leading ``#`` lines carrying the run config and version.

    The seconds column stays empty unless ``timing`` is set, so reruns are byte-identical.
    """
    buffer = io.StringIO()
    buffer.write(f"# version: {__version__}\n")
    buffer.write(f"# config: {json.dumps(config.to_dict(), sort_keys=True)}\n")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(COMPARISON_COLUMNS)
    for row in rows:
        writer.writerow(
            [
                row.scheme,
                f"{row.ratio:g}",
                row.seed,
                f"{row.psnr_db:.6f}",
                f"{row.seconds:.3f}" if timing else "",
                row.converged_shears,
            ]
        )
    return buffer.getvalue()


def comparison_json(rows: Sequence[ComparisonRow], config: RunConfig, timing: bool = False) -> dict:
    """JSON companion of ``comparison_csv``."""
    entries = []
    for row in rows:
        entry = row.to_dict()
        if not timing:
            entry.pop("seconds")
        entries.append(entry)
    return {"version": __version__, "config": config.to_dict(), "rows": entries}
