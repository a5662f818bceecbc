"""CLI commands running reconstructions and comparisons."""

from pathlib import Path
from typing import Annotated

import typer

from directional_cs.commands.common import (
    EXIT_COMPUTATION,
    OutDir,
    ThreadsOption,
    command_errors,
    err_console,
    read_mask,
    read_real_grid,
    run_config,
    write_json,
)
from directional_cs.config.settings import get_settings
from directional_cs.config.standards import PhantomKind, SchemeKind, parse_scheme
from directional_cs.filters.registry import get_filter_registry
from directional_cs.models.solver import SolverOptions
from directional_cs.phantoms.render import default_spec, render
from directional_cs.pipeline.compare import DEFAULT_BASELINE_SCALE, comparison_csv, comparison_json
from directional_cs.pipeline.compare import compare as run_compare
from directional_cs.pipeline.measurement import (
    PipelineError,
    forward_measure,
    read_measurements,
)
from directional_cs.pipeline.reconstruct import (
    reconstruct_directional,
    reconstruct_shearlet,
    reconstruct_wavelet,
    reconstruction_options,
)
from directional_cs.spectral.io import write_grid, write_pgm


def _options(max_iterations: int | None, tolerance: float | None) -> SolverOptions:
    defaults = reconstruction_options()
    return defaults.model_copy(
        update={
            "max_iterations": max_iterations or defaults.max_iterations,
            "relative_tolerance": tolerance or defaults.relative_tolerance,
        }
    )


def register_reconstruction_commands(app: typer.Typer) -> None:
    """Register reconstruct and compare commands.

    Args:
        app: Typer application
    """

    @app.command()
    def reconstruct(
        out: OutDir,
        scheme: Annotated[str, typer.Option("--scheme", help="shearNN, shear, wave01 or wave02")],
        image: Annotated[
            Path | None,
            typer.Option("--image", exists=True, dir_okay=False, help="Image to measure and score"),
        ] = None,
        mask_path: Annotated[
            Path | None, typer.Option("--mask", exists=True, dir_okay=False)
        ] = None,
        measurements_path: Annotated[
            Path | None,
            typer.Option(
                "--measurements",
                exists=True,
                dir_okay=False,
                help="measurements.cifg written by 'measure' (sidecar .json next to it)",
            ),
        ] = None,
        ground_truth: Annotated[
            Path | None, typer.Option("--ground-truth", exists=True, dir_okay=False)
        ] = None,
        strict: Annotated[
            bool, typer.Option("--strict", help="Fail when a subproblem does not converge")
        ] = False,
        threads: ThreadsOption = None,
        max_iterations: Annotated[int | None, typer.Option("--max-iterations", min=1)] = None,
        tolerance: Annotated[float | None, typer.Option("--tolerance")] = None,
    ) -> None:
        """Reconstruct an image; writes reconstruction.cifg/.pgm and report.json."""
        with command_errors():
            kind, finest_scale = parse_scheme(scheme)
            if (image is None) == (measurements_path is None):
                raise ValueError("Give exactly one of --image or --measurements")
            if image is not None:
                if mask_path is None:
                    raise ValueError("--image needs --mask")
                truth = read_real_grid(image)
                measurements = forward_measure(truth, read_mask(mask_path))
            else:
                assert measurements_path is not None
                measurements = read_measurements(
                    measurements_path, measurements_path.with_suffix(".json")
                )
                truth = read_real_grid(ground_truth) if ground_truth else None
            if truth is not None and truth.rows != measurements.grid_size:
                raise PipelineError(
                    f"Ground truth is {truth.rows}x{truth.cols}, measurements have N={measurements.grid_size}",
                    expected=measurements.grid_size,
                    actual=truth.rows,
                )

            options = _options(max_iterations, tolerance)
            config = run_config(
                "reconstruct",
                scheme=scheme,
                image=image,
                mask=mask_path,
                measurements=measurements_path,
                ground_truth=ground_truth,
                grid_size=measurements.grid_size,
                strict=strict,
                solver=options.to_dict(),
            ).to_dict()
            registry = get_filter_registry()
            if kind == SchemeKind.DIRECTIONAL and finest_scale is not None:
                estimate, report = reconstruct_directional(
                    measurements,
                    registry.get_filters(measurements.grid_size, finest_scale),
                    options,
                    pair=registry.wavelet_pair(),
                    ground_truth=truth,
                    threads=threads or get_settings().threads,
                    config=config,
                )
            elif kind == SchemeKind.SHEARLET:
                estimate, report = reconstruct_shearlet(
                    measurements,
                    registry.get_filters(
                        measurements.grid_size,
                        measurements.mask.finest_scale or DEFAULT_BASELINE_SCALE,
                    ),
                    options,
                    pair=registry.wavelet_pair(),
                    ground_truth=truth,
                    config=config,
                )
            else:
                estimate, report = reconstruct_wavelet(
                    measurements,
                    options,
                    scheme=kind,
                    pair=registry.wavelet_pair(),
                    ground_truth=truth,
                    config=config,
                )

            write_grid(out / "reconstruction.cifg", estimate)
            write_pgm(out / "reconstruction.pgm", estimate)
            write_json(out / "report.json", report.to_dict())
            if report.psnr_db is not None:
                typer.echo(f"{report.scheme}: {report.psnr_db:.2f} dB")
            else:
                typer.echo(f"{report.scheme}: {report.converged_count}/{len(report.solves)} converged")

        if strict and report.degraded:
            err_console.print(
                f"[red]error:[/red] {len(report.solves) - report.converged_count} subproblem(s) "
                "did not converge"
            )
            raise typer.Exit(code=EXIT_COMPUTATION)

    @app.command()
    def compare(
        out: OutDir,
        scheme: Annotated[list[str], typer.Option("--scheme", help="Repeat for several schemes")],
        ratio: Annotated[list[float], typer.Option("--ratio", help="Repeat for several ratios")],
        seed: Annotated[
            list[int] | None, typer.Option("--seed", envvar="CIFG_SEED", help="Repeat for several seeds")
        ] = None,
        image: Annotated[
            Path | None,
            typer.Option("--image", exists=True, dir_okay=False, help="Defaults to the disk phantom"),
        ] = None,
        grid_size: Annotated[int, typer.Option("--grid-size")] = 256,
        finest_scale: Annotated[
            int, typer.Option("--finest-scale", help="J of the shear and wave02 masks and of the baseline transforms")
        ] = 4,
        timing: Annotated[bool, typer.Option("--timing", help="Fill the seconds column")] = False,
        strict: Annotated[
            bool, typer.Option("--strict", help="Fail when any run has an unconverged subproblem")
        ] = False,
        threads: ThreadsOption = None,
        max_iterations: Annotated[int | None, typer.Option("--max-iterations", min=1)] = None,
        tolerance: Annotated[float | None, typer.Option("--tolerance")] = None,
    ) -> None:
        """Compare schemes over ratios and seeds; writes comparison.csv and comparison.json."""
        with command_errors():
            for scheme_id in scheme:
                parse_scheme(scheme_id)
            seeds = seed or [0]
            truth = (
                read_real_grid(image) if image else render(default_spec(PhantomKind.DISK, grid_size))
            )
            options = _options(max_iterations, tolerance)
            config = run_config(
                "compare",
                schemes=scheme,
                ratios=ratio,
                seeds=seeds,
                image=image,
                grid_size=truth.rows,
                finest_scale=finest_scale,
                strict=strict,
                solver=options.to_dict(),
            )
            rows = run_compare(
                truth,
                scheme,
                ratio,
                seeds,
                options,
                threads=threads or get_settings().threads,
                baseline_scale=finest_scale,
            )
            (out / "comparison.csv").write_text(comparison_csv(rows, config, timing), encoding="utf-8")
            write_json(out / "comparison.json", comparison_json(rows, config, timing))
            for row in rows:
                typer.echo(f"{row.scheme} ratio={row.ratio:g} seed={row.seed}: {row.psnr_db:.2f} dB")

        degraded = [row for row in rows if row.degraded]
        if strict and degraded:
            err_console.print(
                f"[red]error:[/red] {len(degraded)} of {len(rows)} run(s) have unconverged subproblems"
            )
            raise typer.Exit(code=EXIT_COMPUTATION)
