"""The ``config`` command: show the merged configuration behind the command defaults.

The ``[recognizer]``, ``[screening]``, ``[tpp]`` and ``[generator]`` sections
feed ``recognize``, ``check``, the three-partition commands and
``random-graph``; ``[lib_log_rich]`` configures logging.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import lib_log_rich.runtime
import rich_click as click

from dcm_toolkit.adapters.config.overrides import apply_overrides
from dcm_toolkit.domain.enums import OutputFormat

from .. import safe_console
from ..constants import CLICK_CONTEXT_SETTINGS
from ..context import get_cli_context
from ..typed_click import option
from ._common import fail

if TYPE_CHECKING:
    from lib_layered_config import Config

    from ..context import CLIContext

logger = logging.getLogger(__name__)


def _config_for(cli_ctx: CLIContext, profile: str | None) -> tuple[Config, str | None]:
    """Configuration to display and the profile it belongs to.

    A profile given to ``config`` itself reloads the layers for that profile;
    the root ``--set`` overrides are applied again so they are not lost.
    """
    if not profile:
        return cli_ctx.config, cli_ctx.profile
    reloaded = cli_ctx.services.get_config(profile=profile)
    return apply_overrides(reloaded, cli_ctx.set_overrides), profile


@click.command("config", context_settings=CLICK_CONTEXT_SETTINGS)
@option(
    "--format",
    "output_format",
    type=click.Choice([f.value for f in OutputFormat], case_sensitive=False),
    default=OutputFormat.HUMAN.value,
    help="Human-readable TOML-like listing or JSON.",
)
@option("--section", type=str, default=None, help="Show one section only, e.g. 'screening'.")
@option("--profile", type=str, default=None, help="Show the configuration of another profile.")
@click.pass_context
def cli_config(ctx: click.Context, output_format: str, section: str | None, profile: str | None) -> None:
    """Print the configuration merged from defaults, config files, .env and environment.

    Later layers win: defaults, app, host, user, .env, environment, then ``--set``.
    A missing ``--section`` exits with status 2.
    """
    cli_ctx = get_cli_context(ctx)
    config, effective_profile = _config_for(cli_ctx, profile)
    fmt = OutputFormat(output_format.lower())

    extra = {"command": "config", "format": fmt.value, "section": section, "profile": effective_profile}
    with lib_log_rich.runtime.bind(job_id="cli-config", extra=extra):
        logger.info("Displaying configuration", extra=extra)
        safe_console.echo()
        try:
            cli_ctx.services.display_config(config, output_format=fmt, section=section, profile=effective_profile)
        except ValueError as exc:
            fail(ctx, "config", exc)


__all__ = ["cli_config"]
