# faht/commands/__init__.py
"""Subcommands; each module exposes a register_* function."""

from .compare import register_compare_command
from .ensemble import register_ensemble_command
from .fetch import register_fetch_command
from .run import register_run_command

__all__ = [
    "register_compare_command",
    "register_ensemble_command",
    "register_fetch_command",
    "register_run_command",
]
