"""Screening report rendering.

Human form: ``PASS`` or one ``REJECT <rule> row=<i> [col=<p>] <detail>`` line
per failure. Machine form: ``verdict=pass`` or one
``rule=<rule> row=<i|-> col=<p|-> detail="<text>"`` record per failure.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

import orjson

if TYPE_CHECKING:
    from dcm_toolkit.domain.screening import ScreenFailure, ScreenReport


def _human_line(failure: ScreenFailure) -> str:
    row = "-" if failure.row is None else str(failure.row)
    col = "" if failure.col is None else f" col={failure.col}"
    return f"REJECT {failure.rule.value} row={row}{col} {failure.detail}"


def _machine_line(failure: ScreenFailure) -> str:
    row = "-" if failure.row is None else str(failure.row)
    col = "-" if failure.col is None else str(failure.col)
    detail = orjson.dumps(failure.detail).decode()
    return f"rule={failure.rule.value} row={row} col={col} detail={detail}"


def render_report(report: ScreenReport, *, machine: bool = False) -> str:
    """Render ``report`` in the human or the key=value form.

    Example:
        >>> from dcm_toolkit.domain.enums import ScreenRule
        >>> from dcm_toolkit.domain.screening import ScreenFailure, ScreenReport
        >>> report = ScreenReport((ScreenFailure(ScreenRule.COLUMN_ZERO, 1, 0, "column 0 is 2, expected 1"),))
        >>> print(render_report(report), end="")
        REJECT column-0 row=1 col=0 column 0 is 2, expected 1
        >>> print(render_report(report, machine=True), end="")
        rule=column-0 row=1 col=0 detail="column 0 is 2, expected 1"
        >>> print(render_report(ScreenReport(), machine=True), end="")
        verdict=pass
    """
    lines: list[str] = []
    if report.passed:
        lines.append("verdict=pass" if machine else "PASS")
    else:
        render = _machine_line if machine else _human_line
        lines.extend(render(failure) for failure in report.failures)
    if report.exhausted_rows:
        rows = " ".join(str(i) for i in report.exhausted_rows)
        lines.append(f"# exact subset search fell back to the relaxed bound for rows {rows}")
    return "\n".join(lines) + "\n"


__all__ = ["render_report"]
