"""CLI command estimating restricted isometry constants of sheared-wavelet systems."""

from enum import Enum
from typing import Annotated

import numpy as np
import typer

from directional_cs.commands.common import OutDir, SeedOption, command_errors, run_config, write_json
from directional_cs.config.standards import Cone, DensityKind
from directional_cs.filters.registry import get_filter_registry
from directional_cs.filters.shears import shear_set
from directional_cs.models.shear import ShearIndex, ShearKey
from directional_cs.pipeline.operators import sheared_wavelet_atoms
from directional_cs.sampling.densities import build_density
from directional_cs.solvers.rip import rip_constant, weighted_matrix
from directional_cs.spectral.transforms import centered_frequencies


class RipDensity(str, Enum):
    """Row densities accepted by riptest."""

    UNIFORM = "uniform"
    CONTINUUM = "continuum"
    DISCRETE = "discrete"


def _row_sampling(
    density: RipDensity, grid_size: int, finest_scale: int, key: ShearKey, draws: int | None, seed: int
) -> tuple[list[tuple[int, int]], np.ndarray, int]:
    """Sampled frequencies, their probabilities and the draw count m.

    Without ``draws`` every frequency of the grid is taken once.
    """
    size = grid_size * grid_size
    if density == RipDensity.UNIFORM:
        table = np.full(size, 1.0 / size)
    else:
        table = build_density(
            DensityKind(density.value), grid_size, finest_scale, key.shear, key.cone
        ).flat
    if draws is None:
        indices = np.arange(size)
    else:
        rng = np.random.default_rng(seed)
        indices = rng.choice(size, size=draws, replace=True, p=table)
    freqs = centered_frequencies(grid_size)
    rows, cols = np.divmod(indices, grid_size)
    points = [(int(freqs[r]), int(freqs[c])) for r, c in zip(rows, cols, strict=True)]
    return points, table[indices], len(points)


def register_analysis_commands(app: typer.Typer) -> None:
    """Register the riptest command.

    Args:
        app: Typer application
    """

    @app.command()
    def riptest(
        out: OutDir,
        grid_size: Annotated[int, typer.Option("--grid-size")] = 16,
        finest_scale: Annotated[int, typer.Option("--finest-scale")] = 2,
        shear: Annotated[str, typer.Option("--shear", help="Dyadic shear such as 0, 1/2 or -1")] = "0",
        cone: Annotated[Cone, typer.Option("--cone")] = Cone.HORIZONTAL,
        k: Annotated[int, typer.Option("--k", min=1)] = 2,
        column: Annotated[
            list[int] | None,
            typer.Option("--column", help="Coefficient index to keep (repeatable); default all"),
        ] = None,
        density: Annotated[RipDensity, typer.Option("--density")] = RipDensity.UNIFORM,
        draws: Annotated[
            int | None, typer.Option("--draws", min=1, help="i.i.d. row draws m; default full sampling")
        ] = None,
        samples: Annotated[
            int, typer.Option("--samples", min=1, help="Supports checked in randomized mode")
        ] = 2000,
        exhaustive: Annotated[
            bool | None, typer.Option("--exhaustive/--randomized", help="Default: by problem size")
        ] = None,
        seed: SeedOption = 0,
    ) -> None:
        """Estimate delta_k of the weighted sampling matrix; writes rip.json."""
        with command_errors():
            shear_index = ShearIndex.from_value(shear)
            if shear_index not in shear_set(finest_scale):
                raise ValueError(f"Shear {shear} is not in the shear set of J={finest_scale}")
            key = ShearKey(shear=shear_index, cone=cone)
            columns = list(range(grid_size * grid_size)) if not column else column
            if any(not 0 <= c < grid_size * grid_size for c in columns):
                raise ValueError(f"Column indices must lie in [0, {grid_size * grid_size})")

            atoms = sheared_wavelet_atoms(
                key, grid_size, finest_scale, get_filter_registry().wavelet_pair(), columns
            )
            points, probabilities, count = _row_sampling(
                density, grid_size, finest_scale, key, draws, seed
            )
            matrix = weighted_matrix(points, probabilities, atoms, count)
            estimate = rip_constant(matrix, k, exhaustive=exhaustive, samples=samples, seed=seed)

            config = run_config(
                "riptest",
                grid_size=grid_size,
                finest_scale=finest_scale,
                shear=str(shear_index),
                cone=cone.value,
                k=k,
                columns=len(columns),
                density=density.value,
                draws=draws,
                samples=samples,
                seed=seed,
            )
            write_json(
                out / "rip.json",
                {**estimate.to_dict(), "rows": matrix.shape[0], "columns": matrix.shape[1], "config": config.to_dict()},
            )
            bound = ">=" if estimate.is_lower_bound else "="
            typer.echo(f"delta_{k} {bound} {estimate.delta:.6g} ({estimate.supports_checked} supports)")
