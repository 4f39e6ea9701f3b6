"""Constants shared by the root group, the commands and the entry point."""

from __future__ import annotations

from typing import Final

#: ``-h`` works next to ``--help`` on every command.
CLICK_CONTEXT_SETTINGS: Final[dict[str, list[str]]] = {"help_option_names": ["-h", "--help"]}

#: Encoding of every input and output file; graph, matrix and instance files are ASCII in practice.
TEXT_ENCODING: Final[str] = "utf-8"

#: Characters of traceback printed for an unexpected crash without ``--traceback``.
TRACEBACK_SUMMARY_LIMIT: Final[int] = 500

#: Characters of traceback printed with ``--traceback``.
TRACEBACK_VERBOSE_LIMIT: Final[int] = 10_000

__all__ = [
    "CLICK_CONTEXT_SETTINGS",
    "TEXT_ENCODING",
    "TRACEBACK_SUMMARY_LIMIT",
    "TRACEBACK_VERBOSE_LIMIT",
]
