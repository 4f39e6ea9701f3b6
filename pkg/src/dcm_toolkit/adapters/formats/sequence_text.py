"""Sequence text format: one line of whitespace-separated integers."""

from __future__ import annotations

from typing import TYPE_CHECKING

from dcm_toolkit.domain.errors import FormatError

from ._lines import content_lines, parse_ints

if TYPE_CHECKING:
    from collections.abc import Iterable


def parse_sequence(text: str) -> tuple[int, ...]:
    """Parse the single content line; order and validity are left to the caller.

    Example:
        >>> parse_sequence("# good\\n1 3 6 8\\n")
        (1, 3, 6, 8)
        >>> parse_sequence("1 2\\n3\\n")
        Traceback (most recent call last):
        ...
        dcm_toolkit.domain.errors.FormatError: line 2: a sequence file holds a single line
    """
    lines = list(content_lines(text))
    if not lines:
        raise FormatError("sequence file is empty")
    if len(lines) > 1:
        raise FormatError("a sequence file holds a single line", line=lines[1][0])
    number, content = lines[0]
    return tuple(parse_ints(content, number))


def render_sequence(values: Iterable[int]) -> str:
    return " ".join(str(v) for v in values) + "\n"


__all__ = ["parse_sequence", "render_sequence"]
