"""Domain-specific exceptions for typed error handling at boundaries.

Every fault raised by the domain derives from :class:`DcmToolkitError` so the
CLI can map the whole family onto one exit code. Negative answers (a rejected
degree sequence, a failed screen, a ``no`` from the recognizer) are values,
never exceptions.
"""

from __future__ import annotations


class DcmToolkitError(Exception):
    """Base class for every fault raised by the toolkit.

    Example:
        >>> from dcm_toolkit.domain.errors import DcmToolkitError, GraphError
        >>> issubclass(GraphError, DcmToolkitError)
        True
    """


class GraphError(DcmToolkitError, ValueError):
    """Arc set violates a graph invariant.

    Raised for self-loops, duplicate arcs in a file, asymmetric undirected arc
    sets and empty node sets.

    Example:
        >>> err = GraphError("self-loop at node 3")
        >>> isinstance(err, ValueError)
        True
    """


class NodeOutOfRangeError(GraphError, IndexError):
    """Node id outside ``[0, n)``.

    Example:
        >>> err = NodeOutOfRangeError("node 9 outside [0, 8)")
        >>> isinstance(err, IndexError)
        True
    """


class OrientationError(DcmToolkitError, ValueError):
    """Operation requires the other graph orientation.

    Example:
        >>> str(OrientationError("graph_power requires an undirected graph"))
        'graph_power requires an undirected graph'
    """


class MatrixError(DcmToolkitError, ValueError):
    """Matrix is not square, holds negative entries or has the wrong shape."""


class MalformedColumnZeroError(MatrixError):
    """Column 0 of a (C)DCM candidate is not all ones."""


class NotCumulativeError(MatrixError):
    """A row that should be a cumulative count decreases.

    Example:
        >>> err = NotCumulativeError("row 2 decreases at column 3")
        >>> isinstance(err, MatrixError)
        True
    """


class DimensionMismatchError(MatrixError):
    """Graph and matrix disagree on the node count."""


class SequenceError(DcmToolkitError, ValueError):
    """Integer sequence is not usable for the requested operation.

    Example:
        >>> str(SequenceError("sequence must be nonincreasing"))
        'sequence must be nonincreasing'
    """


class InstanceError(DcmToolkitError, ValueError):
    """Three-partition instance is unusable for the requested operation."""


class InvalidSolutionError(InstanceError):
    """Proposed partition does not solve the instance.

    Example:
        >>> issubclass(InvalidSolutionError, InstanceError)
        True
    """


class FormatError(DcmToolkitError, ValueError):
    """Text input does not follow the expected file format.

    Attributes:
        line: 1-based line number of the offending line, or None when the
            problem is not tied to a line.

    Example:
        >>> err = FormatError("expected two node ids", line=4)
        >>> str(err)
        'line 4: expected two node ids'
        >>> err.line
        4
    """

    def __init__(self, message: str, *, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


__all__ = [
    "DcmToolkitError",
    "DimensionMismatchError",
    "FormatError",
    "GraphError",
    "InstanceError",
    "InvalidSolutionError",
    "MalformedColumnZeroError",
    "MatrixError",
    "NodeOutOfRangeError",
    "NotCumulativeError",
    "OrientationError",
    "SequenceError",
]
