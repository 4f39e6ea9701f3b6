"""Domain layer - pure graph and matrix logic with no I/O or framework dependencies.

Contents:
    * :mod:`.enums` - Orientation, matrix kinds, verdicts and option enums
    * :mod:`.errors` - Domain exception hierarchy rooted at ``DcmToolkitError``
    * :mod:`.graphs` - Graphs, BFS distances and random sampling
    * :mod:`.matrices` - DCM / CDCM computation, conversion and derived invariants
    * :mod:`.sequences` - Degree sequences and good-sequence realization
    * :mod:`.screening` - Polynomial necessary-condition screen
    * :mod:`.recognizer` - Exact backtracking recognizer
    * :mod:`.reduction` - Three-partition instances, solver and gadget construction
"""

from __future__ import annotations

from .enums import (
    BoundMode,
    DegreeMethod,
    MatchPolicy,
    MatrixKind,
    Orientation,
    OutputFormat,
    ScreenRule,
    ScreenVerdict,
    TppStatus,
    ValidationLevel,
    Verdict,
)
from .errors import (
    DcmToolkitError,
    FormatError,
    GraphError,
    InstanceError,
    MatrixError,
    SequenceError,
)
from .graphs import Graph, random_graph
from .matrices import CdcMatrix, DcMatrix, cdcm_of, cdcm_to_dcm, dcm_of, dcm_to_cdcm
from .recognizer import RecognitionOutcome, SearchLimits, recognize
from .reduction import TppInstance, TppSolution, build_gadget, build_matrix, solve_tpp, validate_instance
from .screening import PredecessorBoundConfig, ScreenReport, screen
from .sequences import DegreeSequence, GoodSequence, havel_hakimi, realize_good_sequence

__all__ = [
    # Enums
    "BoundMode",
    # Matrices
    "CdcMatrix",
    "DcMatrix",
    # Errors
    "DcmToolkitError",
    "DegreeMethod",
    # Sequences
    "DegreeSequence",
    "FormatError",
    "GoodSequence",
    # Graphs
    "Graph",
    "GraphError",
    "InstanceError",
    "MatchPolicy",
    "MatrixError",
    "MatrixKind",
    "Orientation",
    "OutputFormat",
    # Screening
    "PredecessorBoundConfig",
    # Recognition
    "RecognitionOutcome",
    "ScreenReport",
    "ScreenRule",
    "ScreenVerdict",
    "SearchLimits",
    "SequenceError",
    # Reduction
    "TppInstance",
    "TppSolution",
    "TppStatus",
    "ValidationLevel",
    "Verdict",
    "build_gadget",
    "build_matrix",
    "cdcm_of",
    "cdcm_to_dcm",
    "dcm_of",
    "dcm_to_cdcm",
    "havel_hakimi",
    "random_graph",
    "realize_good_sequence",
    "recognize",
    "screen",
    "solve_tpp",
    "validate_instance",
]
