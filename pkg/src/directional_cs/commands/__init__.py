"""CLI commands for phantoms, masks, reconstructions and RIP estimates."""

from directional_cs.commands.analysis import register_analysis_commands
from directional_cs.commands.artifacts import register_artifact_commands
from directional_cs.commands.reconstruction import register_reconstruction_commands

__all__ = [
    "register_analysis_commands",
    "register_artifact_commands",
    "register_reconstruction_commands",
]
