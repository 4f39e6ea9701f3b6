"""Sequence commands: degree-sequence graphicality and good-sequence realization."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, TextIO

import lib_log_rich.runtime
import rich_click as click

from dcm_toolkit.adapters.formats import parse_sequence, render_graph
from dcm_toolkit.domain.enums import DegreeMethod
from dcm_toolkit.domain.sequences import (
    DegreeSequence,
    GoodSequence,
    erdos_gallai_check,
    havel_hakimi,
    indegree_realize,
    realize_good_sequence,
)

from ..constants import CLICK_CONTEXT_SETTINGS
from ..exit_codes import ExitCode
from ..output import emit, output_option
from ..typed_click import option
from ._common import domain_errors, input_argument

if TYPE_CHECKING:
    from pathlib import Path

    from dcm_toolkit.domain.graphs import Graph

logger = logging.getLogger(__name__)


@click.command("realize-good", context_settings=CLICK_CONTEXT_SETTINGS)
@input_argument("sequence_file")
@output_option()
@click.pass_context
def cli_realize_good(ctx: click.Context, sequence_file: TextIO, output: Path | None) -> None:
    """Print an undirected tree whose CDCM row 0 is the given good sequence."""
    with (
        lib_log_rich.runtime.bind(job_id="cli-realize-good", extra={"command": "realize-good"}),
        domain_errors(ctx, "realize-good"),
    ):
        good = GoodSequence(parse_sequence(sequence_file.read()))
        graph = realize_good_sequence(good)
        logger.info("Realized good sequence", extra={"n": graph.n, "plateau": good.plateau})
        emit(render_graph(graph), output)


def _undirected_verdict(d: DegreeSequence, method: DegreeMethod) -> tuple[bool, list[str], Graph | None]:
    if method is DegreeMethod.ERDOS_GALLAI:
        accepted = erdos_gallai_check(d)
        realization = havel_hakimi(d).graph if accepted else None
        return accepted, [], realization
    result = havel_hakimi(d)
    notes = [] if result.accepted else [f"step {result.failed_step}: {result.reason}"]
    return result.accepted, notes, result.graph


@click.command("degseq", context_settings=CLICK_CONTEXT_SETTINGS)
@input_argument("sequence_file")
@option(
    "--method",
    type=click.Choice([m.value for m in DegreeMethod]),
    default=DegreeMethod.ERDOS_GALLAI.value,
    show_default=True,
    help="Graphicality test: Erdos-Gallai inequalities or Havel-Hakimi reduction.",
)
@option("--realize", is_flag=True, default=False, help="Print a realizing graph instead of the verdict line.")
@option("--directed", is_flag=True, default=False, help="Treat the values as in-degrees of a directed graph.")
@output_option()
@click.pass_context
def cli_degseq(
    ctx: click.Context, sequence_file: TextIO, method: str, realize: bool, directed: bool, output: Path | None
) -> None:
    """Decide whether a nonincreasing sequence is a degree sequence.

    Prints ``graphical`` or ``not-graphical`` and exits 0 or 1. With
    ``--directed`` the values are in-degrees, realizable whenever every value
    is below the sequence length.
    """
    extra = {"command": "degseq", "method": method, "realize": realize, "directed": directed}
    with lib_log_rich.runtime.bind(job_id="cli-degseq", extra=extra), domain_errors(ctx, "degseq"):
        d = DegreeSequence(parse_sequence(sequence_file.read()))
        notes: list[str] = []
        if directed:
            accepted = d.values[0] < d.p
            realization = indegree_realize(d) if accepted else None
        else:
            accepted, notes, realization = _undirected_verdict(d, DegreeMethod(method))
        logger.info("Degree sequence judged", extra={"p": d.p, "graphical": accepted})
        verdict = "graphical" if accepted else "not-graphical"
        if realize and realization is not None:
            emit(render_graph(realization, [verdict]), output)
        else:
            emit("\n".join([verdict, *(f"# {note}" for note in notes)]) + "\n", output)
        if not accepted:
            ctx.exit(int(ExitCode.NEGATIVE))


__all__ = ["cli_degseq", "cli_realize_good"]
