"""Three-partition instance and solution formats.

Instance: line 1 holds ``m``, line 2 the ``3m`` integers in any order.
Solution: an optional status line (``positive``, ``negative`` or ``unknown``)
followed by one line of three 0-based indices per triple.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from dcm_toolkit.domain.enums import TppStatus
from dcm_toolkit.domain.errors import FormatError

from ._lines import content_lines, parse_ints

if TYPE_CHECKING:
    from dcm_toolkit.domain.reduction import GadgetLayout, TppInstance, TppOutcome

_STATUSES = {status.value: status for status in TppStatus}


def parse_tpp(text: str) -> tuple[int, ...]:
    """Parse an instance file into its raw values, in file order.

    Example:
        >>> parse_tpp("2\\n9 7 6 5 2 1\\n")
        (9, 7, 6, 5, 2, 1)
        >>> parse_tpp("2\\n1 2 3\\n")
        Traceback (most recent call last):
        ...
        dcm_toolkit.domain.errors.FormatError: line 2: expected 3m = 6 integers, got 3
    """
    lines = list(content_lines(text))
    if len(lines) != 2:  # noqa: PLR2004
        raise FormatError(f"expected the group count line and one value line, got {len(lines)} lines")
    (m_line, m_content), (values_line, values_content) = lines
    header = parse_ints(m_content, m_line)
    if len(header) != 1 or header[0] < 1:
        raise FormatError(f"expected a positive group count, got {m_content!r}", line=m_line)
    m = header[0]
    values = parse_ints(values_content, values_line)
    if len(values) != 3 * m:
        raise FormatError(f"expected 3m = {3 * m} integers, got {len(values)}", line=values_line)
    return tuple(values)


def render_tpp(instance: TppInstance) -> str:
    """Render an instance with its values nonincreasing.

    Example:
        >>> from dcm_toolkit.domain.reduction import TppInstance
        >>> print(render_tpp(TppInstance((5, 4, 3))), end="")
        1
        5 4 3
    """
    return f"{instance.m}\n" + " ".join(str(v) for v in instance.values) + "\n"


def parse_solution(text: str) -> list[list[int]]:
    """Parse a solution file into index groups; validity is checked by the domain.

    Example:
        >>> parse_solution("positive\\n0 3 5\\n1 2 4\\n")
        [[0, 3, 5], [1, 2, 4]]
    """
    lines = list(content_lines(text))
    if lines and lines[0][1].lower() in _STATUSES:
        number, content = lines[0]
        if _STATUSES[content.lower()] is not TppStatus.POSITIVE:
            raise FormatError(f"solution file reports {content.lower()}", line=number)
        lines = lines[1:]
    if not lines:
        raise FormatError("solution file holds no triples")
    groups: list[list[int]] = []
    for number, content in lines:
        group = parse_ints(content, number)
        if len(group) != 3:  # noqa: PLR2004
            raise FormatError(f"expected three indices, got {len(group)}", line=number)
        groups.append(group)
    return groups


def render_outcome(outcome: TppOutcome, instance: TppInstance) -> str:
    """Render a solver outcome; positive outcomes list their triples with the values as comments.

    Example:
        >>> from dcm_toolkit.domain.reduction import TppInstance, solve_tpp
        >>> inst = TppInstance((9, 7, 6, 5, 2, 1))
        >>> print(render_outcome(solve_tpp(inst), inst), end="")
        positive
        0 3 5  # 9 + 5 + 1 = 15
        1 2 4  # 7 + 6 + 2 = 15
    """
    lines = [outcome.status.value]
    if outcome.reason:
        lines.append(f"# {outcome.reason}")
    if outcome.solution is not None:
        for triple in outcome.solution.triples:
            values = [instance.values[i] for i in triple]
            addends = " + ".join(str(v) for v in values)
            lines.append(f"{' '.join(str(i) for i in triple)}  # {addends} = {sum(values)}")
    return "\n".join(lines) + "\n"


def layout_comments(layout: GadgetLayout) -> list[str]:
    """Comment lines ``node <id> role <label>`` for every gadget node."""
    return [f"node {node} role {role.label}" for node, role in enumerate(layout.roles)]


__all__ = ["layout_comments", "parse_solution", "parse_tpp", "render_outcome", "render_tpp"]
