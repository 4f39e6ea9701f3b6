"""CLI command implementations.

Collects all subcommand functions and re-exports them for registration
with the root CLI group.

Contents:
    * Info and config commands from :mod:`.info` and :mod:`.config`
    * ``compute`` and ``describe`` from :mod:`.matrices`
    * ``check`` from :mod:`.screening`
    * ``recognize`` from :mod:`.recognize`
    * ``reduce``, ``gadget``, ``solve-tpp``, ``validate-tpp`` and
      ``transform-tpp`` from :mod:`.reduction`
    * ``realize-good`` and ``degseq`` from :mod:`.sequences`
    * ``random-graph`` from :mod:`.graphs`
"""

from __future__ import annotations

from .config import cli_config
from .graphs import cli_random_graph
from .info import cli_info
from .matrices import cli_compute, cli_describe
from .recognize import cli_recognize
from .reduction import cli_gadget, cli_reduce, cli_solve_tpp, cli_transform_tpp, cli_validate_tpp
from .screening import cli_check
from .sequences import cli_degseq, cli_realize_good

__all__ = [
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
]
