"""Line scanning shared by every text codec."""

from __future__ import annotations

from typing import TYPE_CHECKING

from dcm_toolkit.domain.errors import FormatError

if TYPE_CHECKING:
    from collections.abc import Iterator


def content_lines(text: str) -> Iterator[tuple[int, str]]:
    """Yield ``(line_number, content)`` for non-blank lines with ``#`` comments removed.

    Example:
        >>> list(content_lines("# header\\nD 2\\n\\n0 1  # arc\\n"))
        [(2, 'D 2'), (4, '0 1')]
    """
    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if content:
            yield number, content


def parse_ints(content: str, line: int) -> list[int]:
    """Split ``content`` into integers, raising :class:`FormatError` on anything else.

    Example:
        >>> parse_ints("1 2  3", 1)
        [1, 2, 3]
        >>> parse_ints("1 x", 7)
        Traceback (most recent call last):
        ...
        dcm_toolkit.domain.errors.FormatError: line 7: expected integers, got 'x'
    """
    values: list[int] = []
    for token in content.split():
        try:
            values.append(int(token))
        except ValueError:
            raise FormatError(f"expected integers, got {token!r}", line=line) from None
    return values


__all__ = ["content_lines", "parse_ints"]
