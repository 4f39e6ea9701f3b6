"""Distance-count matrices: construction from graphs, conversions, canonical form.

Row ``i`` of the DCM ``N`` counts nodes at distance exactly ``k`` *to* node
``i``; row ``i`` of the CDCM ``M`` counts nodes at distance at most ``k``.
Both are stored dense as read-only ``int64`` arrays including trailing zero
columns. The matrix types accept any square natural matrix so that screening
and recognition can be fed candidates; graph-derived matrices additionally
satisfy the structural invariants checked there.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Any, ClassVar, TypeVar

import numpy as np
import numpy.typing as npt

from .enums import MatrixKind, Orientation
from .errors import MalformedColumnZeroError, MatrixError, NotCumulativeError
from .graphs import INFINITY, Graph, distances_to

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

logger = logging.getLogger(__name__)

IntArray = npt.NDArray[np.int64]
_M = TypeVar("_M", bound="_CountMatrix")


def _as_entries(values: Any) -> IntArray:
    array = np.asarray(values)
    if array.ndim != 2 or array.shape[0] != array.shape[1] or array.shape[0] == 0:  # noqa: PLR2004
        raise MatrixError(f"matrix must be square and non-empty, got shape {array.shape}")
    if array.dtype.kind == "f":
        if not np.all(np.isfinite(array)) or not np.all(array == np.round(array)):
            raise MatrixError("matrix entries must be integers")
    elif array.dtype.kind not in "iub":
        raise MatrixError(f"matrix entries must be integers, got dtype {array.dtype}")
    entries = array.astype(np.int64)
    if np.any(entries < 0):
        row, col = (int(x) for x in np.argwhere(entries < 0)[0])
        raise MatrixError(f"negative entry at row {row}, column {col}")
    entries.flags.writeable = False
    return entries


@dataclass(frozen=True, eq=False, slots=True)
class _CountMatrix:
    """Square matrix of naturals held as a read-only numpy array."""

    entries: IntArray
    kind: ClassVar[MatrixKind]

    def __post_init__(self) -> None:
        object.__setattr__(self, "entries", _as_entries(self.entries))

    @classmethod
    def from_rows(cls: type[_M], rows: Iterable[Sequence[int]]) -> _M:
        """Build from nested integer rows."""
        return cls(np.array([list(r) for r in rows], dtype=np.int64))

    @property
    def n(self) -> int:
        return int(self.entries.shape[0])

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(int(x) for x in self.entries[i])

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(self.n)]

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return bool(np.array_equal(self.entries, other.entries))  # type: ignore[attr-defined]

    def __hash__(self) -> int:
        return hash((self.kind, self.entries.shape, self.entries.tobytes()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.rows()!r})"


class DcMatrix(_CountMatrix):
    """Distance-count matrix, ``entries[i][k] = n_k(i)``.

    Example:
        >>> DcMatrix.from_rows([[1, 1], [1, 1]]).n
        2
        >>> DcMatrix.from_rows([[1, 2, 3]])
        Traceback (most recent call last):
        ...
        dcm_toolkit.domain.errors.MatrixError: matrix must be square and non-empty, got shape (1, 3)
    """

    __slots__ = ()
    kind: ClassVar[MatrixKind] = MatrixKind.DCM


class CdcMatrix(_CountMatrix):
    """Cumulative distance-count matrix, ``entries[i][k] = m_k(i)``."""

    __slots__ = ()
    kind: ClassVar[MatrixKind] = MatrixKind.CDCM


CountMatrix = DcMatrix | CdcMatrix


@dataclass(frozen=True, slots=True)
class GoodnessVerdict:
    """Classification of an integer sequence as good / very good.

    Attributes:
        is_good: Starts at 1, strictly increases, then stays at ``k <= len``.
        is_very_good: Good and ``k == len``.
        plateau_value: ``k`` when good, else None.
        plateau_start: First index holding ``k`` when good, else None.
    """

    is_good: bool
    is_very_good: bool
    plateau_value: int | None = None
    plateau_start: int | None = None


_NOT_GOOD = GoodnessVerdict(is_good=False, is_very_good=False)


def goodness(a: Sequence[int]) -> GoodnessVerdict:
    """Classify ``a`` as good or very good.

    Example:
        >>> goodness([1, 3, 6, 8, 8, 8, 8, 8])
        GoodnessVerdict(is_good=True, is_very_good=True, plateau_value=8, plateau_start=3)
        >>> goodness([1, 1, 1]).is_very_good
        False
        >>> goodness([1, 2, 2, 3]).is_good
        False
    """
    values = [int(x) for x in a]
    if not values or values[0] != 1:
        return _NOT_GOOD
    start = 0
    while start + 1 < len(values) and values[start + 1] > values[start]:
        start += 1
    plateau = values[start]
    if any(v != plateau for v in values[start:]) or plateau > len(values):
        return _NOT_GOOD
    return GoodnessVerdict(
        is_good=True,
        is_very_good=plateau == len(values),
        plateau_value=plateau,
        plateau_start=start,
    )


def dcm_of(g: Graph) -> DcMatrix:
    """Distance-count matrix of ``g``; unreachable nodes count in no column.

    Example:
        >>> dcm_of(Graph.undirected(4, [(0, 1), (1, 2), (2, 3)])).row(0)
        (1, 1, 1, 1)
    """
    entries = np.zeros((g.n, g.n), dtype=np.int64)
    for i in range(g.n):
        finite = [int(d) for d in distances_to(g, i).dist if d != INFINITY]
        entries[i] = np.bincount(finite, minlength=g.n)
    return DcMatrix(entries)


def cdcm_of(g: Graph) -> CdcMatrix:
    """Cumulative distance-count matrix of ``g``.

    Example:
        >>> cdcm_of(Graph.empty(2)).rows()
        [(1, 1), (1, 1)]
    """
    return dcm_to_cdcm(dcm_of(g))


def _require_column_zero(matrix: CountMatrix) -> None:
    bad = np.flatnonzero(matrix.entries[:, 0] != 1)
    if bad.size:
        row = int(bad[0])
        raise MalformedColumnZeroError(f"column 0 of row {row} is {int(matrix.entries[row, 0])}, expected 1")


def dcm_to_cdcm(matrix: DcMatrix) -> CdcMatrix:
    """Row-wise prefix sums.

    Raises:
        MalformedColumnZeroError: If column 0 is not all ones.

    Example:
        >>> dcm_to_cdcm(DcMatrix.from_rows([[1, 1, 0], [1, 2, 0], [1, 0, 0]])).rows()
        [(1, 2, 2), (1, 3, 3), (1, 1, 1)]
    """
    _require_column_zero(matrix)
    return CdcMatrix(np.cumsum(matrix.entries, axis=1))


def cdcm_to_dcm(matrix: CdcMatrix) -> DcMatrix:
    """Row-wise first differences with ``n_0 = m_0``.

    Raises:
        NotCumulativeError: If some row decreases.

    Example:
        >>> cdcm_to_dcm(CdcMatrix.from_rows([[1, 2], [1, 2]])).rows()
        [(1, 1), (1, 1)]
    """
    diffs = np.diff(matrix.entries, axis=1, prepend=0)
    if np.any(diffs < 0):
        row, col = (int(x) for x in np.argwhere(diffs < 0)[0])
        raise NotCumulativeError(f"row {row} decreases at column {col}")
    return DcMatrix(diffs)


def canonical_order(matrix: CountMatrix) -> tuple[int, ...]:
    """Row indices in ascending lexicographic order of the rows (stable on ties).

    Example:
        >>> canonical_order(DcMatrix.from_rows([[1, 2, 0], [1, 1, 1], [1, 2, 0]]))
        (1, 0, 2)
    """
    keys = matrix.entries.T[::-1]
    return tuple(int(i) for i in np.lexsort(keys))


def canonicalize(matrix: _M) -> _M:
    """Sort rows ascending lexicographically; idempotent and permutation invariant.

    Example:
        >>> canonicalize(DcMatrix.from_rows([[1, 2], [1, 1]])).rows()
        [(1, 1), (1, 2)]
    """
    order = list(canonical_order(matrix))
    return type(matrix)(matrix.entries[order])


def dds(matrix: DcMatrix, i: int) -> tuple[int, ...]:
    """Distance degree sequence of node ``i``: its DCM row cut after the in-eccentricity.

    Example:
        >>> dds(DcMatrix.from_rows([[1, 2, 0], [1, 1, 1], [1, 1, 0]]), 1)
        (1, 1, 1)
    """
    row = matrix.row(i)
    last = max((k for k, count in enumerate(row) if count), default=0)
    return row[: last + 1]


def eccentricities(matrix: DcMatrix) -> tuple[int, ...]:
    """In-eccentricity of each node, read off the last nonzero column."""
    return tuple(len(dds(matrix, i)) - 1 for i in range(matrix.n))


def diameter_of(matrix: DcMatrix) -> int:
    """Largest in-eccentricity encoded by the matrix."""
    return max(eccentricities(matrix))


def distance_distribution(matrix: DcMatrix) -> tuple[int, ...]:
    """Column sums: entry ``k`` counts ordered pairs ``(y, i)`` with ``d(y, i) = k``.

    Example:
        >>> distance_distribution(DcMatrix.from_rows([[1, 1], [1, 1]]))
        (2, 2)
    """
    return tuple(int(x) for x in matrix.entries.sum(axis=0))


def wiener_index(matrix: DcMatrix, orientation: Orientation) -> int:
    """Sum of all finite distances; undirected graphs count each pair once.

    Example:
        >>> path = DcMatrix.from_rows([[1, 1, 1], [1, 2, 0], [1, 1, 1]])
        >>> wiener_index(path, Orientation.UNDIRECTED)
        4
    """
    total = int(np.dot(np.arange(matrix.n), matrix.entries.sum(axis=0)))
    return total // 2 if orientation is Orientation.UNDIRECTED else total


__all__ = [
    "CdcMatrix",
    "CountMatrix",
    "DcMatrix",
    "GoodnessVerdict",
    "IntArray",
    "canonical_order",
    "canonicalize",
    "cdcm_of",
    "cdcm_to_dcm",
    "dcm_of",
    "dcm_to_cdcm",
    "dds",
    "diameter_of",
    "distance_distribution",
    "eccentricities",
    "goodness",
    "wiener_index",
]
