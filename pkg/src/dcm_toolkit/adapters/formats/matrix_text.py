"""Matrix text format: a ``DCM`` or ``CDCM`` marker line, then ``n`` rows of ``n`` naturals."""

from __future__ import annotations

from typing import TYPE_CHECKING

from dcm_toolkit.domain.enums import MatrixKind
from dcm_toolkit.domain.errors import FormatError, MatrixError
from dcm_toolkit.domain.matrices import CdcMatrix, DcMatrix

from ._lines import content_lines, parse_ints

if TYPE_CHECKING:
    from dcm_toolkit.domain.matrices import CountMatrix

_MARKERS = {kind.marker: kind for kind in MatrixKind}


def parse_matrix(text: str, kind: MatrixKind | None = None) -> CountMatrix:
    """Parse a DCM or CDCM.

    The marker line decides the kind. It may be omitted when ``kind`` is given;
    when both are present they must agree.

    Raises:
        FormatError: On a missing or conflicting marker, ragged rows, a
            non-square shape or a non-integer entry.

    Example:
        >>> parse_matrix("CDCM\\n1 2\\n1 2\\n")
        CdcMatrix([(1, 2), (1, 2)])
        >>> parse_matrix("1\\n", MatrixKind.DCM)
        DcMatrix([(1,)])
        >>> parse_matrix("DCM\\n1 1\\n1\\n")
        Traceback (most recent call last):
        ...
        dcm_toolkit.domain.errors.FormatError: line 3: expected 2 entries, got 1
    """
    lines = list(content_lines(text))
    if lines and lines[0][1].upper() in _MARKERS:
        marker = _MARKERS[lines[0][1].upper()]
        if kind is not None and kind is not marker:
            raise FormatError(f"file is marked {marker.marker} but {kind.marker} was requested", line=lines[0][0])
        kind = marker
        lines = lines[1:]
    if kind is None:
        raise FormatError("missing DCM/CDCM marker line")
    if not lines:
        raise FormatError("matrix has no rows")
    rows: list[list[int]] = []
    for number, content in lines:
        row = parse_ints(content, number)
        width = len(rows[0]) if rows else len(lines)
        if len(row) != width:
            raise FormatError(f"expected {width} entries, got {len(row)}", line=number)
        rows.append(row)
    matrix_type = DcMatrix if kind is MatrixKind.DCM else CdcMatrix
    try:
        return matrix_type.from_rows(rows)
    except MatrixError as exc:
        raise FormatError(str(exc)) from exc


def render_matrix(matrix: CountMatrix) -> str:
    """Render with the kind marker first.

    Example:
        >>> print(render_matrix(DcMatrix.from_rows([[1, 1], [1, 1]])), end="")
        DCM
        1 1
        1 1
    """
    lines = [matrix.kind.marker]
    lines.extend(" ".join(str(x) for x in row) for row in matrix.rows())
    return "\n".join(lines) + "\n"


__all__ = ["parse_matrix", "render_matrix"]
