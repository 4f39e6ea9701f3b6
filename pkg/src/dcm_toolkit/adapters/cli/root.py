"""The ``dcm-toolkit`` command group.

Global options are resolved here once per invocation: the layered
configuration is loaded for ``--profile``/``--env-file``, ``--set``
overrides are applied on top, logging is initialised from the result and
everything is handed to the subcommands as a
:class:`~dcm_toolkit.adapters.cli.context.CLIContext`.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import rich_click as click

from dcm_toolkit import __init__conf__
from dcm_toolkit.adapters.config.overrides import apply_overrides

from . import safe_console
from .constants import CLICK_CONTEXT_SETTINGS
from .context import apply_traceback_preferences, store_cli_context
from .typed_click import option, version_option

if TYPE_CHECKING:
    from lib_layered_config import Config

    from dcm_toolkit.composition import AppServices


def _with_overrides(config: Config, set_overrides: tuple[str, ...]) -> Config:
    """``config`` with every ``SECTION.KEY=VALUE`` applied; a bad override is a usage error."""
    try:
        return apply_overrides(config, set_overrides)
    except ValueError as exc:
        raise click.UsageError(str(exc)) from exc


@click.group(
    help=__init__conf__.title,
    context_settings=CLICK_CONTEXT_SETTINGS,
    invoke_without_command=True,
)
@version_option(
    version=__init__conf__.version,
    prog_name=__init__conf__.shell_command,
    message=f"{__init__conf__.shell_command} version {__init__conf__.version}",
)
@option(
    "--traceback/--no-traceback",
    is_flag=True,
    default=False,
    help="Print the full Python traceback when a command crashes.",
)
@option(
    "--profile",
    type=str,
    default=None,
    help="Read configuration from a named profile (e.g. 'bench', 'ci').",
)
@option(
    "--set",
    "set_overrides",
    multiple=True,
    default=(),
    metavar="SECTION.KEY=VALUE",
    help="Override one configuration key for this run, e.g. recognizer.max_n=8 (repeatable).",
)
@option(
    "--env-file",
    "env_file",
    type=click.Path(exists=True, file_okay=True, dir_okay=False, readable=True),
    default=None,
    help="Use this .env file instead of searching upwards from the working directory.",
)
@click.pass_context
def cli(
    ctx: click.Context,
    traceback: bool,
    profile: str | None,
    set_overrides: tuple[str, ...],
    env_file: str | None,
) -> None:
    """Resolve global options, then dispatch; without a subcommand print the help.

    ``ctx.obj`` arrives as the services factory (``build_production`` or
    ``build_testing``) and leaves as the resolved CLI context.

    Example:
        >>> from click.testing import CliRunner
        >>> from dcm_toolkit.composition import build_testing
        >>> result = CliRunner().invoke(cli, ["info"], obj=build_testing)
        >>> result.exit_code
        0
        >>> "dcm_toolkit" in result.output
        True
    """
    if not callable(ctx.obj):
        raise RuntimeError("Services factory not provided. This is a bug.")
    services: AppServices = ctx.obj()  # type: ignore[assignment]  # Click's obj is typed as Any
    config = _with_overrides(services.get_config(profile=profile, dotenv_path=env_file), set_overrides)
    services.init_logging(config)
    store_cli_context(
        ctx,
        traceback=traceback,
        config=config,
        services=services,
        profile=profile,
        set_overrides=set_overrides,
    )
    apply_traceback_preferences(traceback)

    if ctx.invoked_subcommand is None:
        safe_console.echo(ctx.get_help())


def _register_commands() -> None:
    # command modules import this package, so they can only be pulled in once ``cli`` exists
    from .commands import (  # noqa: PLC0415
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

    for cmd in (
        cli_compute,
        cli_describe,
        cli_check,
        cli_recognize,
        cli_reduce,
        cli_gadget,
        cli_solve_tpp,
        cli_validate_tpp,
        cli_transform_tpp,
        cli_degseq,
        cli_realize_good,
        cli_random_graph,
        cli_config,
        cli_info,
    ):
        cli.add_command(cmd)


_register_commands()


__all__ = ["cli"]
