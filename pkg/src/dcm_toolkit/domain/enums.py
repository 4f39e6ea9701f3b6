"""Type-safe domain enums for graph orientation, matrix kinds and verdicts."""

from __future__ import annotations

from enum import Enum


class OutputFormat(str, Enum):
    """Output format options for configuration display.

    Inherits from str to allow direct string comparison and Click integration.

    Example:
        >>> OutputFormat.HUMAN.value
        'human'
        >>> OutputFormat.JSON == "json"
        True
    """

    HUMAN = "human"
    JSON = "json"


class Orientation(str, Enum):
    """Whether a graph's arcs are ordered pairs or symmetric edges.

    The single-letter header of the graph text format maps onto these members.

    Example:
        >>> Orientation.from_header("U")
        <Orientation.UNDIRECTED: 'undirected'>
        >>> Orientation.DIRECTED.header
        'D'
    """

    DIRECTED = "directed"
    UNDIRECTED = "undirected"

    @property
    def header(self) -> str:
        """Return the graph file header letter."""
        return "D" if self is Orientation.DIRECTED else "U"

    @classmethod
    def from_header(cls, letter: str) -> Orientation:
        """Map a ``D``/``U`` header letter to an orientation.

        Raises:
            ValueError: If the letter is neither ``D`` nor ``U``.
        """
        if letter == "D":
            return cls.DIRECTED
        if letter == "U":
            return cls.UNDIRECTED
        raise ValueError(f"unknown orientation header {letter!r}")


class MatrixKind(str, Enum):
    """Distance-count matrix flavour: exact counts or cumulative counts.

    Example:
        >>> MatrixKind("cdcm").marker
        'CDCM'
    """

    DCM = "dcm"
    CDCM = "cdcm"

    @property
    def marker(self) -> str:
        """Return the kind marker line used by the matrix text format."""
        return self.value.upper()


class BoundMode(str, Enum):
    """How predecessor bounds are checked during screening.

    ``RELAXED`` compares against the largest candidate values column by column.
    ``EXACT`` additionally searches for an actual dominating predecessor subset.
    """

    RELAXED = "relaxed"
    EXACT = "exact"


class MatchPolicy(str, Enum):
    """Whether witness rows are bound to node ids or compared as a multiset.

    Example:
        >>> MatchPolicy.UP_TO_PERMUTATION.value
        'up-to-permutation'
    """

    FIXED_ROWS = "fixed-rows"
    UP_TO_PERMUTATION = "up-to-permutation"


class ValidationLevel(str, Enum):
    """Strictness levels for three-partition instance validation."""

    LENIENT = "lenient"
    TPP = "tpp"
    HARDENED = "hardened"


class Verdict(str, Enum):
    """Outcome of an exact decision procedure.

    Example:
        >>> Verdict.UNKNOWN == "unknown"
        True
    """

    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"


class ScreenVerdict(str, Enum):
    """Outcome of the necessary-condition screen."""

    PASS = "pass"
    REJECT = "reject"


class ScreenRule(str, Enum):
    """Identifiers of the screening rules, as printed in reports.

    Example:
        >>> ScreenRule.COLUMN_ZERO.value
        'column-0'
    """

    COLUMN_ZERO = "column-0"
    GOODNESS = "goodness"
    VERY_GOOD = "very-good"
    PREDECESSOR_COUNT = "predecessor-count"
    PREDECESSOR_SUM = "predecessor-sum"
    PREDECESSOR_SUBSET = "predecessor-subset"
    COLUMN_GRAPHICAL = "column-graphical"
    CONVERSION = "conversion"


class TppStatus(str, Enum):
    """Outcome of exact three-partition solving."""

    POSITIVE = "positive"
    NEGATIVE = "negative"
    UNKNOWN = "unknown"


class DegreeMethod(str, Enum):
    """Graphicality test used by the ``degseq`` command."""

    ERDOS_GALLAI = "eg"
    HAVEL_HAKIMI = "hh"


__all__ = [
    "BoundMode",
    "DegreeMethod",
    "MatchPolicy",
    "MatrixKind",
    "Orientation",
    "OutputFormat",
    "ScreenRule",
    "ScreenVerdict",
    "TppStatus",
    "ValidationLevel",
    "Verdict",
]
