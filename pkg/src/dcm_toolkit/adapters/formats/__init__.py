"""Text codecs for graphs, matrices, sequences, three-partition files and reports.

Contents:
    * :mod:`.graph_text` - ``D <n>`` / ``U <n>`` arc lists
    * :mod:`.matrix_text` - ``DCM`` / ``CDCM`` marked square matrices
    * :mod:`.sequence_text` - one line of integers
    * :mod:`.tpp_text` - instances, solutions and gadget layout comments
    * :mod:`.report_text` - screening reports, human and key=value
"""

from __future__ import annotations

from .graph_text import parse_graph, render_graph
from .matrix_text import parse_matrix, render_matrix
from .report_text import render_report
from .sequence_text import parse_sequence, render_sequence
from .tpp_text import layout_comments, parse_solution, parse_tpp, render_outcome, render_tpp

__all__ = [
    "layout_comments",
    "parse_graph",
    "parse_matrix",
    "parse_sequence",
    "parse_solution",
    "parse_tpp",
    "render_graph",
    "render_matrix",
    "render_outcome",
    "render_report",
    "render_sequence",
    "render_tpp",
]
