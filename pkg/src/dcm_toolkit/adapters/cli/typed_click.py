"""rich_click decorators re-declared with complete types.

rich_click's ``option``, ``argument`` and ``version_option`` return partially
unknown types, which pyright strict flags at every decorated command. The
wrappers below forward unchanged, so parameters are still built as
``RichOption``/``RichArgument`` and help panels render as before.
"""

from collections.abc import Callable
from typing import Any, Protocol, cast

import rich_click as click

_CommandDecorator = Callable[[Callable[..., Any]], Callable[..., Any]]


class _TypedDecorators(Protocol):
    option: Callable[..., _CommandDecorator]
    argument: Callable[..., _CommandDecorator]
    version_option: Callable[..., _CommandDecorator]


_typed = cast("_TypedDecorators", click)


def option(*param_decls: str, **attrs: Any) -> _CommandDecorator:
    """:func:`rich_click.option` with a known return type."""
    return _typed.option(*param_decls, **attrs)


def argument(*param_decls: str, **attrs: Any) -> _CommandDecorator:
    """:func:`rich_click.argument` with a known return type."""
    return _typed.argument(*param_decls, **attrs)


def version_option(*param_decls: str, **attrs: Any) -> _CommandDecorator:
    return _typed.version_option(*param_decls, **attrs)


__all__ = ["argument", "option", "version_option"]
