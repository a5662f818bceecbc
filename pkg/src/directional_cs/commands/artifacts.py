"""CLI commands producing input artifacts: phantoms, masks and measurements."""

from pathlib import Path
from typing import Annotated

import numpy as np
import typer

from directional_cs.commands.common import (
    OutDir,
    SeedOption,
    ThreadsOption,
    command_errors,
    read_mask,
    read_real_grid,
    run_config,
    write_json,
)
from directional_cs.config.settings import get_settings
from directional_cs.config.standards import PhantomKind, SchemeKind, parse_scheme
from directional_cs.models.grid import RealGrid
from directional_cs.models.mask import SamplingMask
from directional_cs.phantoms.render import default_spec, load_spec, render
from directional_cs.pipeline.measurement import forward_measure, write_measurements
from directional_cs.sampling.masks import baseline_radial_mask, draw_mask
from directional_cs.spectral.io import write_grid, write_pgm


def mask_image(mask: SamplingMask) -> RealGrid:
    """Mask indicator with DC in the middle, for display."""
    return RealGrid(np.fft.fftshift(mask.indicator()).astype(np.float64))


def register_artifact_commands(app: typer.Typer) -> None:
    """Register phantom, mask and measure commands.

    Args:
        app: Typer application
    """

    @app.command()
    def phantom(
        out: OutDir,
        spec: Annotated[
            Path | None,
            typer.Option("--spec", exists=True, dir_okay=False, help="Phantom spec JSON"),
        ] = None,
        kind: Annotated[PhantomKind, typer.Option("--kind")] = PhantomKind.DISK,
        grid_size: Annotated[int, typer.Option("--grid-size")] = 256,
    ) -> None:
        """Render a cartoon phantom to phantom.cifg and phantom.pgm."""
        with command_errors():
            phantom_spec = load_spec(spec) if spec else default_spec(kind, grid_size)
            image = render(phantom_spec)
            config = run_config("phantom", spec=spec, kind=kind.value, grid_size=grid_size)
            write_grid(out / "phantom.cifg", image)
            write_pgm(out / "phantom.pgm", image)
            write_json(
                out / "phantom.json",
                {"spec": phantom_spec.to_dict(), "config": config.to_dict()},
            )
            typer.echo(str(out / "phantom.cifg"))

    @app.command()
    def mask(
        out: OutDir,
        grid_size: Annotated[int, typer.Option("--grid-size")] = 256,
        scheme: Annotated[str, typer.Option("--scheme", help="shearNN, shear, wave01 or wave02")] = "shear14",
        finest_scale: Annotated[
            int, typer.Option("--finest-scale", help="J for the shear and wave02 masks")
        ] = 4,
        ratio: Annotated[float | None, typer.Option("--ratio")] = None,
        per_shear: Annotated[int | None, typer.Option("--per-shear", min=1)] = None,
        theoretical: Annotated[bool, typer.Option("--theoretical")] = False,
        rho: Annotated[float | None, typer.Option("--rho")] = None,
        seed: SeedOption = 0,
        threads: ThreadsOption = None,
    ) -> None:
        """Draw a sampling mask and write mask.json and mask.pgm."""
        with command_errors():
            kind, scale = parse_scheme(scheme)
            if kind == SchemeKind.WAVELET_RADIAL:
                if ratio is None:
                    raise ValueError("wave01 masks need --ratio")
                sampling = baseline_radial_mask(grid_size, ratio, seed)
            else:
                sampling = draw_mask(
                    scale if scale is not None else finest_scale,
                    grid_size,
                    per_shear,
                    seed,
                    ratio=ratio,
                    theoretical=theoretical,
                    rho=rho,
                    threads=threads or get_settings().threads,
                )
            config = run_config(
                "mask",
                grid_size=grid_size,
                scheme=scheme,
                finest_scale=finest_scale,
                ratio=ratio,
                per_shear=per_shear,
                theoretical=theoretical,
                rho=rho,
                seed=seed,
            )
            write_json(out / "mask.json", {**sampling.to_dict(), "config": config.to_dict()})
            write_pgm(out / "mask.pgm", mask_image(sampling))
            typer.echo(f"{sampling.cardinality} points -> {out / 'mask.json'}")

    @app.command()
    def measure(
        out: OutDir,
        image: Annotated[Path, typer.Option("--image", exists=True, dir_okay=False)],
        mask_path: Annotated[Path, typer.Option("--mask", exists=True, dir_okay=False)],
    ) -> None:
        """Sample an image's spectrum on a mask; writes measurements.cifg and measurements.json."""
        with command_errors():
            sampling = read_mask(mask_path)
            measurements = forward_measure(read_real_grid(image), sampling)
            sidecar = out / "measurements.json"
            write_measurements(measurements, out / "measurements.cifg", sidecar)
            config = run_config("measure", image=image, mask=mask_path)
            write_json(sidecar, {**measurements.sidecar(), "config": config.to_dict()})
            typer.echo(str(out / "measurements.cifg"))
