"""Shared plumbing for the matrix, graph and reduction commands.

Contains the input/option decorators every domain command uses, the error
boundary that turns domain exceptions into ``Error: ...`` plus exit status 2,
and the verdict-to-exit-status mapping.
"""

from __future__ import annotations

import logging
from contextlib import contextmanager
from typing import TYPE_CHECKING, Any, NoReturn

import rich_click as click
from pydantic import ValidationError

from dcm_toolkit.domain.enums import MatrixKind, Orientation
from dcm_toolkit.domain.errors import DcmToolkitError
from dcm_toolkit.domain.matrices import CdcMatrix

from .. import safe_console
from ..constants import TEXT_ENCODING
from ..context import get_cli_context
from ..exit_codes import ExitCode
from ..typed_click import argument, option

if TYPE_CHECKING:
    from collections.abc import Callable, Iterator

    from dcm_toolkit.adapters.config.settings import ToolkitSettings
    from dcm_toolkit.domain.enums import ScreenVerdict, TppStatus, Verdict
    from dcm_toolkit.domain.matrices import CountMatrix

logger = logging.getLogger(__name__)


def input_argument(name: str) -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """Positional input file; ``-`` reads stdin."""
    return argument(name, type=click.File("r", encoding=TEXT_ENCODING))


def mode_option() -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """``--mode directed|undirected`` (default directed)."""
    return option(
        "--mode",
        type=click.Choice([o.value for o in Orientation]),
        default=Orientation.DIRECTED.value,
        show_default=True,
        help="Graph orientation the matrix is judged against.",
    )


def kind_option() -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """``--kind dcm|cdcm``, used only when the file carries no marker line."""
    return option(
        "--kind",
        type=click.Choice([k.value for k in MatrixKind]),
        default=None,
        help="Matrix kind for files without a DCM/CDCM marker line.",
    )


def kind_of(matrix: CountMatrix) -> MatrixKind:
    return MatrixKind.CDCM if isinstance(matrix, CdcMatrix) else MatrixKind.DCM


def fail(ctx: click.Context, command: str, exc: Exception) -> NoReturn:
    """Log ``exc``, print ``Error: <message>`` to stderr and exit with status 2."""
    logger.error(
        "Command failed",
        extra={"command": command, "error": str(exc), "error_type": type(exc).__name__},
    )
    safe_console.echo(f"Error: {exc}", err=True)
    ctx.exit(int(ExitCode.ERROR))


@contextmanager
def domain_errors(ctx: click.Context, command: str) -> Iterator[None]:
    """Convert :class:`DcmToolkitError` raised inside the block into exit status 2."""
    try:
        yield
    except DcmToolkitError as exc:
        fail(ctx, command, exc)


def toolkit_settings(ctx: click.Context, command: str) -> ToolkitSettings:
    """Validated toolkit settings of the current invocation; bad values exit with status 2."""
    try:
        return get_cli_context(ctx).settings()
    except ValidationError as exc:
        fail(ctx, command, ValueError(f"invalid configuration: {exc.errors()[0]['msg']}"))


def finish(ctx: click.Context, verdict: Verdict | ScreenVerdict | TppStatus) -> None:
    """Exit with the status that encodes ``verdict``; success returns normally."""
    code = ExitCode.for_verdict(verdict)
    if code is not ExitCode.SUCCESS:
        ctx.exit(int(code))


__all__ = [
    "domain_errors",
    "fail",
    "finish",
    "input_argument",
    "kind_of",
    "kind_option",
    "mode_option",
    "toolkit_settings",
]
