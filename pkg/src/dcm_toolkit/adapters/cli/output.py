"""Result sinks shared by the output-producing commands.

Every command renders its result into one string first and hands it to
:func:`emit`, which writes it either to stdout or, with ``-o/--output``,
atomically to a file: the text goes to a sibling temporary file that is
flushed, synced and then moved over the target, so readers never observe a
half-written result.

Contents:
    * :func:`emit` - write rendered text to stdout or a file.
    * :func:`write_atomic` - temp-file + replace write.
    * :func:`output_option` - the shared ``-o/--output`` option.
"""

from __future__ import annotations

import logging
import os
from pathlib import Path
from typing import TYPE_CHECKING, Any

import rich_click as click

from . import safe_console
from .constants import TEXT_ENCODING
from .typed_click import option

if TYPE_CHECKING:
    from collections.abc import Callable

logger = logging.getLogger(__name__)


def write_atomic(path: Path, text: str) -> None:
    """Replace ``path`` with ``text`` in one rename.

    Example:
        >>> import tempfile
        >>> with tempfile.TemporaryDirectory() as tmp:
        ...     target = Path(tmp) / "out.txt"
        ...     write_atomic(target, "1\\n")
        ...     target.read_text(encoding="utf-8")
        '1\\n'
    """
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    try:
        with tmp.open("w", encoding=TEXT_ENCODING, newline="\n") as handle:
            handle.write(text)
            handle.flush()
            os.fsync(handle.fileno())
        tmp.replace(path)
    except BaseException:
        tmp.unlink(missing_ok=True)
        raise


def emit(text: str, output: Path | None) -> None:
    """Write ``text`` to ``output`` when given, otherwise to stdout.

    ``text`` carries its own trailing newline.
    """
    if output is None:
        safe_console.echo(text, nl=False)
        return
    write_atomic(output, text)
    logger.info("Result written", extra={"path": str(output), "bytes": len(text.encode(TEXT_ENCODING))})


def output_option() -> Callable[[Callable[..., Any]], Callable[..., Any]]:
    """Return the ``-o/--output PATH`` option decorator."""
    return option(
        "-o",
        "--output",
        "output",
        type=click.Path(dir_okay=False, writable=True, path_type=Path),
        default=None,
        help="Write the result atomically to PATH instead of stdout.",
    )


__all__ = ["emit", "output_option", "write_atomic"]
