"""Console output that survives legacy codepages.

Every command writes through :func:`echo`. On a console whose encoding cannot
represent a character (a Windows console at cp1252 with ``errors="strict"``)
the character is replaced by an ASCII spelling, so a command that already did
its work does not exit with ``UnicodeEncodeError``. Error messages quote user
input verbatim, which is where such characters usually come from.

Contents:
    * :data:`ASCII_FALLBACKS` - glyph to ASCII map
    * :func:`ascii_fallback` - transliterate for a target encoding
    * :func:`encode_safe` - transliterate only when the encoding rejects the text
    * :func:`echo` - :func:`click.echo` replacement
"""

from __future__ import annotations

from typing import IO, Any, Final

import rich_click as click

ASCII_FALLBACKS: Final[dict[str, str]] = {
    "✓": "[OK]",
    "✗": "[X]",
    "⚠": "[!]",
    "∞": "inf",
    "≥": ">=",
    "≤": "<=",
    "≠": "!=",
    "→": "->",
    "←": "<-",
    "\u2014": "-",
    "•": "-",
    "…": "...",
    "\u2018": "'",
    "\u2019": "'",
    "\u201c": '"',
    "\u201d": '"',
}

_UNIVERSAL_ENCODINGS: Final[frozenset[str]] = frozenset({"utf-8", "utf8", "utf-16", "utf16", "utf-32", "utf32"})


def _stream_encoding(file: IO[Any] | None) -> str | None:
    stream = file if file is not None else click.get_text_stream("stdout")
    encoding = getattr(stream, "encoding", None)
    return encoding if isinstance(encoding, str) else None


def ascii_fallback(text: str, encoding: str) -> str:
    """Rewrite ``text`` so ``encoding`` accepts it; unmapped characters become ``?``.

    Example:
        >>> ascii_fallback("d(i, j) ≥ 2 → ∞", "ascii")
        'd(i, j) >= 2 -> inf'
        >>> ascii_fallback("node 中", "cp1252")
        'node ?'
    """
    mapped = "".join(ASCII_FALLBACKS.get(character, character) for character in text)
    return mapped.encode(encoding, errors="replace").decode(encoding)


def encode_safe(text: str, encoding: str | None) -> str:
    """``text`` unchanged when ``encoding`` accepts it (or is unknown), else its fallback.

    Checked before writing: a failed write would already have emitted a prefix.

    Example:
        >>> encode_safe("≥", "utf-8"), encode_safe("≥", "cp1252")
        ('≥', '>=')
    """
    if encoding is None or encoding.lower() in _UNIVERSAL_ENCODINGS:
        return text
    try:
        text.encode(encoding)
    except UnicodeEncodeError:
        return ascii_fallback(text, encoding)
    return text


def echo(message: object = "", *, file: IO[Any] | None = None, err: bool = False, nl: bool = True) -> None:
    """Write ``message`` like :func:`click.echo`, degrading what the stream cannot encode."""
    text = message if isinstance(message, str) else str(message)
    target = file if file is not None else click.get_text_stream("stderr" if err else "stdout")
    click.echo(encode_safe(text, _stream_encoding(target)), file=target, nl=nl)


__all__ = [
    "ASCII_FALLBACKS",
    "ascii_fallback",
    "echo",
    "encode_safe",
]
