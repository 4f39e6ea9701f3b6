"""CLI package providing the command-line interface.

Re-exports all public symbols from submodules for convenient access.

Contents:
    * Click context helpers and traceback state management from :mod:`.context`
    * Exit statuses from :mod:`.exit_codes`
    * Root command group from :mod:`.root`
    * Entry point from :mod:`.main`
    * All command functions from :mod:`.commands`

System Role:
    Acts as the public facade for the CLI subsystem. Consumers import from here
    and remain insulated from internal module boundaries.
"""

from __future__ import annotations

from .commands import (
    cli_check,
    cli_compute,
    cli_config,
    cli_degseq,
    cli_describe,
    cli_gadget,
    cli_info,
    cli_random_graph,
    cli_realize_good,
    cli_recognize,
    cli_reduce,
    cli_solve_tpp,
    cli_transform_tpp,
    cli_validate_tpp,
)
from .constants import CLICK_CONTEXT_SETTINGS, TRACEBACK_SUMMARY_LIMIT, TRACEBACK_VERBOSE_LIMIT
from .context import (
    TracebackState,
    apply_traceback_preferences,
    restore_traceback_state,
    snapshot_traceback_state,
    store_cli_context,
)
from .exit_codes import ExitCode
from .main import main
from .root import cli

__all__ = [
    # Constants
    "CLICK_CONTEXT_SETTINGS",
    "TRACEBACK_SUMMARY_LIMIT",
    "TRACEBACK_VERBOSE_LIMIT",
    "ExitCode",
    # Traceback management
    "TracebackState",
    "apply_traceback_preferences",
    # Root command
    "cli",
    # Commands
    "cli_check",
    "cli_compute",
    "cli_config",
    "cli_degseq",
    "cli_describe",
    "cli_gadget",
    "cli_info",
    "cli_random_graph",
    "cli_realize_good",
    "cli_recognize",
    "cli_reduce",
    "cli_solve_tpp",
    "cli_transform_tpp",
    "cli_validate_tpp",
    # Entry point
    "main",
    "restore_traceback_state",
    "snapshot_traceback_state",
    # Context helpers
    "store_cli_context",
]
