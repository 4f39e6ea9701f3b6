"""Public package surface: distance-count matrices, screening, recognition and reduction.

Imports route through the architectural layers:
- Domain exports: graphs, matrices, screen, recognizer and three-partition reduction
- Composition exports: wired configuration services
- Metadata: package information
"""

from __future__ import annotations

# Metadata
from .__init__conf__ import print_info

# Composition exports (wired adapters)
from .composition import get_config

# Domain exports
from .domain import (
    CdcMatrix,
    DcMatrix,
    DcmToolkitError,
    Graph,
    MatrixKind,
    Orientation,
    SearchLimits,
    TppInstance,
    Verdict,
    build_gadget,
    build_matrix,
    cdcm_of,
    dcm_of,
    recognize,
    screen,
    solve_tpp,
)

__all__ = [
    "CdcMatrix",
    "DcMatrix",
    "DcmToolkitError",
    "Graph",
    "MatrixKind",
    "Orientation",
    "SearchLimits",
    "TppInstance",
    "Verdict",
    "build_gadget",
    "build_matrix",
    "cdcm_of",
    "dcm_of",
    "get_config",
    "print_info",
    "recognize",
    "screen",
    "solve_tpp",
]
