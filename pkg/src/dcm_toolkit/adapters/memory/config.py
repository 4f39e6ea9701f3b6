"""In-memory configuration adapters for testing.

Provides configuration functions that satisfy the same Protocols as
production adapters but operate entirely in memory -- no filesystem,
no lib_layered_config discovery.
"""

from __future__ import annotations

import tempfile
from pathlib import Path

from lib_layered_config import Config

from ...domain.enums import OutputFormat
from ..config.settings import ToolkitSettings

_SECTIONS = frozenset(ToolkitSettings.model_fields)


def get_config_in_memory(
    *,
    profile: str | None = None,
    start_dir: str | None = None,
    dotenv_path: str | None = None,
) -> Config:
    """Return an empty in-memory Config."""
    return Config({}, {})


def get_default_config_path_in_memory() -> Path:
    """Return a synthetic path (not a real file)."""
    return Path(tempfile.gettempdir()) / "dcm_toolkit" / "defaultconfig.toml"


def display_config_in_memory(
    config: Config,
    *,
    output_format: OutputFormat = OutputFormat.HUMAN,
    section: str | None = None,
    profile: str | None = None,
) -> None:
    """No-op display -- satisfies the DisplayConfig protocol."""


def load_toolkit_settings_in_memory(config: Config) -> ToolkitSettings:
    """Validate whatever toolkit sections the in-memory Config holds.

    The empty Config of :func:`get_config_in_memory` yields the defaults;
    ``--set`` overrides applied by the root command still take effect.

    Example:
        >>> load_toolkit_settings_in_memory(Config({"tpp": {"max_items": 6}}, {})).tpp.max_items
        6
    """
    data = config.as_dict()
    return ToolkitSettings.model_validate({key: value for key, value in data.items() if key in _SECTIONS})


__all__ = [
    "display_config_in_memory",
    "get_config_in_memory",
    "get_default_config_path_in_memory",
    "load_toolkit_settings_in_memory",
]
