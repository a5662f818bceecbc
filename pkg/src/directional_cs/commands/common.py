"""Shared CLI plumbing: logging setup, option types, error-to-exit-code mapping."""

import json
import logging
from collections.abc import Iterator
from contextlib import contextmanager
from pathlib import Path
from typing import Annotated, Any

import typer
from pydantic import ValidationError
from rich.console import Console
from rich.logging import RichHandler

from directional_cs.filters.directional import FilterBankError
from directional_cs.models.grid import RealGrid, SpectralError
from directional_cs.models.mask import SamplingMask
from directional_cs.models.reports import RunConfig
from directional_cs.phantoms.render import PhantomError
from directional_cs.pipeline.measurement import PipelineError
from directional_cs.sampling.masks import SamplingError
from directional_cs.solvers.linear_map import SolverError
from directional_cs.spectral.io import GridFormatError, read_grid

logger = logging.getLogger(__name__)

EXIT_COMPUTATION = 1
EXIT_USAGE = 2

err_console = Console(stderr=True)

OutDir = Annotated[
    Path,
    typer.Option(
        "--out",
        exists=True,
        file_okay=False,
        dir_okay=True,
        writable=True,
        help="Existing output directory",
    ),
]
SeedOption = Annotated[int, typer.Option("--seed", envvar="CIFG_SEED", help="Random seed")]
ThreadsOption = Annotated[
    int | None, typer.Option("--threads", min=1, help="Concurrent per-shear subproblems")
]


def configure_logging(level: str) -> None:
    """Route library logs to stderr through rich."""
    logging.basicConfig(
        level=level.upper(),
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, rich_tracebacks=False, show_path=False)],
        force=True,
    )


@contextmanager
def command_errors() -> Iterator[None]:
    """Map library exceptions to exit codes: 2 for usage/config, 1 for computation."""
    try:
        yield
    except (SpectralError, FilterBankError, SamplingError, SolverError, PipelineError, PhantomError) as e:
        err_console.print(f"[red]error:[/red] {e}")
        raise typer.Exit(code=EXIT_COMPUTATION) from e
    except ValidationError as e:
        err_console.print(f"[red]invalid configuration:[/red] {e}")
        raise typer.Exit(code=EXIT_USAGE) from e
    except (ValueError, GridFormatError, FileNotFoundError, KeyError, json.JSONDecodeError) as e:
        err_console.print(f"[red]error:[/red] {e}")
        raise typer.Exit(code=EXIT_USAGE) from e


def write_json(path: Path, payload: dict[str, Any]) -> None:
    """Write indented, key-stable JSON."""
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")


def run_config(command: str, **parameters: Any) -> RunConfig:
    """RunConfig with paths rendered as strings."""
    rendered = {
        name: str(value) if isinstance(value, Path) else value for name, value in parameters.items()
    }
    return RunConfig(command=command, parameters=rendered)


def read_real_grid(path: Path) -> RealGrid:
    """Read a CIFG file that must hold a real image."""
    grid = read_grid(path)
    if not isinstance(grid, RealGrid):
        raise GridFormatError(f"{path} holds a complex grid, expected a real image", path)
    return grid


def read_mask(path: Path) -> SamplingMask:
    """Read a mask JSON file (extra keys such as the run config are ignored)."""
    return SamplingMask.from_dict(json.loads(path.read_text(encoding="utf-8")))
