"""Per-invocation CLI state and the shared traceback switches.

The root group stores one :class:`CLIContext` in ``ctx.obj``; every command
reaches the merged configuration, the wired services and the validated
toolkit settings through :func:`get_cli_context`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, NamedTuple

import lib_cli_exit_tools

if TYPE_CHECKING:
    import rich_click as click
    from lib_layered_config import Config

    from dcm_toolkit.adapters.config.settings import ToolkitSettings
    from dcm_toolkit.composition import AppServices


class TracebackState(NamedTuple):
    """The two ``lib_cli_exit_tools`` traceback switches."""

    enabled: bool
    force_color: bool


@dataclass(slots=True)
class CLIContext:
    """What the root group resolved before dispatching to a command.

    ``set_overrides`` keeps the raw ``--set`` strings so ``config --profile``
    can reapply them after reloading under another profile.
    """

    traceback: bool
    config: Config
    services: AppServices
    profile: str | None = None
    set_overrides: tuple[str, ...] = ()
    _settings: ToolkitSettings | None = field(default=None, repr=False)

    def settings(self) -> ToolkitSettings:
        """Validated ``[recognizer]``/``[screening]``/``[tpp]``/``[generator]`` sections, parsed once.

        Raises:
            pydantic.ValidationError: If a configured value is out of range.

        Example:
            >>> from lib_layered_config import Config
            >>> from dcm_toolkit.composition import build_testing
            >>> cli_ctx = CLIContext(traceback=False, config=Config({}, {}), services=build_testing())
            >>> cli_ctx.settings().recognizer.max_n
            10
            >>> cli_ctx.settings() is cli_ctx.settings()
            True
        """
        if self._settings is None:
            self._settings = self.services.load_toolkit_settings(self.config)
        return self._settings


def store_cli_context(
    ctx: click.Context,
    *,
    traceback: bool,
    config: Config,
    services: AppServices,
    profile: str | None = None,
    set_overrides: tuple[str, ...] = (),
) -> None:
    """Replace ``ctx.obj`` (the services factory) with the resolved :class:`CLIContext`."""
    ctx.obj = CLIContext(
        traceback=traceback,
        config=config,
        services=services,
        profile=profile,
        set_overrides=set_overrides,
    )


def get_cli_context(ctx: click.Context) -> CLIContext:
    """Return the :class:`CLIContext` the root group stored.

    Raises:
        RuntimeError: If a command runs without the root group in front of it.

    Example:
        >>> from types import SimpleNamespace
        >>> from lib_layered_config import Config
        >>> from dcm_toolkit.composition import build_testing
        >>> stored = CLIContext(traceback=False, config=Config({}, {}), services=build_testing())
        >>> get_cli_context(SimpleNamespace(obj=stored)) is stored  # type: ignore[arg-type]
        True
    """
    if not isinstance(ctx.obj, CLIContext):
        raise RuntimeError("CLI context not initialized; commands must run under the root group")
    return ctx.obj


def apply_traceback_preferences(enabled: bool) -> None:
    """Turn full, coloured tracebacks on or off for ``lib_cli_exit_tools``."""
    lib_cli_exit_tools.config.traceback = bool(enabled)
    lib_cli_exit_tools.config.traceback_force_color = bool(enabled)


def snapshot_traceback_state() -> TracebackState:
    """Current traceback switches, for :func:`restore_traceback_state`.

    Example:
        >>> original = snapshot_traceback_state()
        >>> apply_traceback_preferences(True)
        >>> snapshot_traceback_state().enabled
        True
        >>> restore_traceback_state(original)
        >>> snapshot_traceback_state() == original
        True
    """
    return TracebackState(
        enabled=bool(getattr(lib_cli_exit_tools.config, "traceback", False)),
        force_color=bool(getattr(lib_cli_exit_tools.config, "traceback_force_color", False)),
    )


def restore_traceback_state(state: TracebackState) -> None:
    lib_cli_exit_tools.config.traceback = state.enabled
    lib_cli_exit_tools.config.traceback_force_color = state.force_color


__all__ = [
    "CLIContext",
    "TracebackState",
    "apply_traceback_preferences",
    "get_cli_context",
    "restore_traceback_state",
    "snapshot_traceback_state",
    "store_cli_context",
]
