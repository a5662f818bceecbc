"""directional-cs command line.

Directional compressed sensing from subsampled Fourier data: masks, per-shear
basis pursuit, baselines and RIP estimates.
"""

from typing import Annotated

import typer

from directional_cs import __version__
from directional_cs.commands import (
    register_analysis_commands,
    register_artifact_commands,
    register_reconstruction_commands,
)
from directional_cs.commands.common import command_errors, configure_logging
from directional_cs.config.settings import get_settings

app = typer.Typer(
    name="dircs",
    help="Directional sampling and reconstruction from subsampled Fourier data.",
    no_args_is_help=True,
    add_completion=False,
)


def _version(value: bool) -> None:
    if value:
        typer.echo(__version__)
        raise typer.Exit()


@app.callback()
def root(
    log_level: Annotated[
        str | None, typer.Option("--log-level", help="Overrides DIRCS_LOG_LEVEL")
    ] = None,
    version: Annotated[
        bool, typer.Option("--version", callback=_version, is_eager=True, help="Print the version")
    ] = False,
) -> None:
    """Directional sampling and reconstruction from subsampled Fourier data."""
    with command_errors():
        configure_logging(log_level or get_settings().log_level)


# Register all commands
register_artifact_commands(app)
register_reconstruction_commands(app)
register_analysis_commands(app)


def main() -> None:
    """Run the CLI."""
    app()


if __name__ == "__main__":
    main()
