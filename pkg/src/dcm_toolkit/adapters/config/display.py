"""Render the merged configuration through lib_layered_config's Rich display."""

from __future__ import annotations

from typing import TYPE_CHECKING

import lib_log_rich.runtime
from lib_layered_config import Config
from lib_layered_config import OutputFormat as LibOutputFormat
from lib_layered_config import display_config as _lib_display

from dcm_toolkit.domain.enums import OutputFormat

if TYPE_CHECKING:
    from rich.console import Console


def display_config(
    config: Config,
    *,
    output_format: OutputFormat = OutputFormat.HUMAN,
    section: str | None = None,
    console: Console | None = None,
    profile: str | None = None,
) -> None:
    """Print ``config`` (or one section such as ``recognizer``) with provenance.

    Pending log records are flushed first so they do not interleave with the
    listing.

    Raises:
        ValueError: When ``section`` does not exist.
    """
    if lib_log_rich.runtime.is_initialised():
        lib_log_rich.runtime.flush()
    _lib_display(
        config,
        output_format=LibOutputFormat(output_format.value),
        section=section,
        profile=profile,
        console=console,
    )


__all__ = ["display_config"]
