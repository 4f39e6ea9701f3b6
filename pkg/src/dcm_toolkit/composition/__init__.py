"""Composition root wiring adapters to application ports."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

# Configuration services
from ..adapters.config.display import display_config
from ..adapters.config.loader import get_config, get_default_config_path
from ..adapters.config.settings import load_toolkit_settings

# Logging services
from ..adapters.logging.setup import init_logging

# pyright checks at type-check time that every adapter function
# matches the Protocol of its port.
if TYPE_CHECKING:
    from ..application.ports import (
        DisplayConfig,
        GetConfig,
        GetDefaultConfigPath,
        InitLogging,
        LoadToolkitSettings,
    )

    _assert_get_config: GetConfig = get_config
    _assert_get_default_config_path: GetDefaultConfigPath = get_default_config_path
    _assert_display_config: DisplayConfig = display_config
    _assert_load_toolkit_settings: LoadToolkitSettings = load_toolkit_settings
    _assert_init_logging: InitLogging = init_logging


@dataclass(frozen=True, slots=True)
class AppServices:
    """Frozen container holding all application port implementations."""

    get_config: GetConfig
    get_default_config_path: GetDefaultConfigPath
    display_config: DisplayConfig
    load_toolkit_settings: LoadToolkitSettings
    init_logging: InitLogging


def build_production() -> AppServices:
    """Wire production adapters into an AppServices container."""
    return AppServices(
        get_config=get_config,
        get_default_config_path=get_default_config_path,
        display_config=display_config,
        load_toolkit_settings=load_toolkit_settings,
        init_logging=init_logging,
    )


def build_testing() -> AppServices:
    """Wire in-memory adapters into an AppServices container.

    Configuration starts empty, so every toolkit setting takes its default
    unless the invocation passes ``--set SECTION.KEY=VALUE``.

    Returns:
        AppServices container with in-memory adapters.
    """
    from ..adapters.memory import (  # noqa: PLC0415 - in-memory doubles stay off the production import path
        display_config_in_memory,
        get_config_in_memory,
        get_default_config_path_in_memory,
        init_logging_in_memory,
        load_toolkit_settings_in_memory,
    )

    return AppServices(
        get_config=get_config_in_memory,
        get_default_config_path=get_default_config_path_in_memory,
        display_config=display_config_in_memory,
        load_toolkit_settings=load_toolkit_settings_in_memory,
        init_logging=init_logging_in_memory,
    )


__all__ = [
    # Composition
    "AppServices",
    "build_production",
    "build_testing",
    # Configuration
    "display_config",
    "get_config",
    "get_default_config_path",
    # Logging
    "init_logging",
    "load_toolkit_settings",
]
