"""Commands that compute matrices from graphs and read statistics off them.

Contents:
    * :func:`cli_compute` - DCM or CDCM of a graph file.
    * :func:`cli_describe` - in-degrees, eccentricities, distance distribution
      and Wiener index encoded by a matrix.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, TextIO

import lib_log_rich.runtime
import rich_click as click

from dcm_toolkit.adapters.formats import parse_graph, parse_matrix, render_matrix
from dcm_toolkit.domain.enums import MatrixKind, Orientation
from dcm_toolkit.domain.matrices import (
    CdcMatrix,
    canonicalize,
    cdcm_of,
    cdcm_to_dcm,
    dcm_of,
    dds,
    diameter_of,
    distance_distribution,
    eccentricities,
    wiener_index,
)
from dcm_toolkit.domain.sequences import in_degree_sequence

from ..constants import CLICK_CONTEXT_SETTINGS
from ..output import emit, output_option
from ..typed_click import option
from ._common import domain_errors, input_argument, kind_option, mode_option

if TYPE_CHECKING:
    from collections.abc import Iterable
    from pathlib import Path

    from dcm_toolkit.domain.matrices import CountMatrix, DcMatrix

logger = logging.getLogger(__name__)


@click.command("compute", context_settings=CLICK_CONTEXT_SETTINGS)
@input_argument("graph_file")
@option("--cumulative", is_flag=True, default=False, help="Print the CDCM instead of the DCM.")
@option("--canonical", is_flag=True, default=False, help="Sort rows lexicographically.")
@output_option()
@click.pass_context
def cli_compute(ctx: click.Context, graph_file: TextIO, cumulative: bool, canonical: bool, output: Path | None) -> None:
    """Print the distance-count matrix of a graph file.

    Row ``i`` lists, for ``k = 0..n-1``, how many nodes reach node ``i`` in
    exactly ``k`` steps (at most ``k`` with ``--cumulative``).
    """
    extra = {"command": "compute", "cumulative": cumulative, "canonical": canonical}
    with lib_log_rich.runtime.bind(job_id="cli-compute", extra=extra), domain_errors(ctx, "compute"):
        graph = parse_graph(graph_file.read())
        logger.info("Computing matrix", extra={"n": graph.n, "arcs": len(graph.arcs)})
        matrix: CountMatrix = cdcm_of(graph) if cumulative else dcm_of(graph)
        if canonical:
            matrix = canonicalize(matrix)
        emit(render_matrix(matrix), output)


def _ints(values: Iterable[int]) -> str:
    return " ".join(str(v) for v in values)


def _describe(dcm: DcMatrix, orientation: Orientation) -> str:
    lines = [
        f"n {dcm.n}",
        f"in-degrees {_ints(in_degree_sequence(dcm).values)}",
        f"eccentricities {_ints(eccentricities(dcm))}",
        f"diameter {diameter_of(dcm)}",
        f"distance-distribution {_ints(distance_distribution(dcm))}",
        f"wiener-index {wiener_index(dcm, orientation)}",
    ]
    lines.extend(f"dds {i} {_ints(dds(dcm, i))}" for i in range(dcm.n))
    return "\n".join(lines) + "\n"


@click.command("describe", context_settings=CLICK_CONTEXT_SETTINGS)
@input_argument("matrix_file")
@kind_option()
@mode_option()
@output_option()
@click.pass_context
def cli_describe(ctx: click.Context, matrix_file: TextIO, kind: str | None, mode: str, output: Path | None) -> None:
    """Print the graph statistics a (C)DCM determines.

    The matrix is taken at face value; use ``check`` or ``recognize`` first
    to find out whether it belongs to a graph at all.
    """
    extra = {"command": "describe", "kind": kind, "mode": mode}
    with lib_log_rich.runtime.bind(job_id="cli-describe", extra=extra), domain_errors(ctx, "describe"):
        matrix = parse_matrix(matrix_file.read(), MatrixKind(kind) if kind else None)
        dcm = cdcm_to_dcm(matrix) if isinstance(matrix, CdcMatrix) else matrix
        logger.info("Describing matrix", extra={"n": dcm.n})
        emit(_describe(dcm, Orientation(mode)), output)


__all__ = ["cli_compute", "cli_describe"]
