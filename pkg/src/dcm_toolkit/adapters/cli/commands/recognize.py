"""The ``recognize`` command: exact decision with a witness graph."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, TextIO

import lib_log_rich.runtime
import rich_click as click

from dcm_toolkit.adapters.formats import parse_matrix, render_graph
from dcm_toolkit.domain.enums import MatchPolicy, MatrixKind, Orientation
from dcm_toolkit.domain.recognizer import SearchLimits, recognize

from ..constants import CLICK_CONTEXT_SETTINGS
from ..output import emit, output_option
from ..typed_click import option
from ._common import domain_errors, fail, finish, input_argument, kind_option, mode_option, toolkit_settings

if TYPE_CHECKING:
    from pathlib import Path

    from dcm_toolkit.domain.recognizer import RecognitionOutcome

logger = logging.getLogger(__name__)


def render_outcome(outcome: RecognitionOutcome) -> str:
    """Witness graph for ``yes``; otherwise the verdict line and its reason.

    Example:
        >>> from dcm_toolkit.domain.enums import Verdict
        >>> from dcm_toolkit.domain.recognizer import RecognitionOutcome, SearchStats
        >>> print(render_outcome(RecognitionOutcome(Verdict.NO, stats=SearchStats(7, 1.5), reason="done")), end="")
        no
        # done
        # explored=7 elapsed_ms=1.500
    """
    stats = f"explored={outcome.stats.explored} elapsed_ms={outcome.stats.elapsed_ms:.3f}"
    if outcome.witness is not None:
        return render_graph(outcome.witness, [f"verdict={outcome.verdict.value}", stats])
    lines = [outcome.verdict.value]
    if outcome.reason:
        lines.append(f"# {outcome.reason}")
    lines.append(f"# {stats}")
    return "\n".join(lines) + "\n"


@click.command("recognize", context_settings=CLICK_CONTEXT_SETTINGS)
@input_argument("matrix_file")
@kind_option()
@mode_option()
@option("--max-n", "max_n", type=int, default=None, help="Largest order searched [default: recognizer.max_n].")
@option("--timeout", type=float, default=None, help="Time budget in seconds [default: recognizer.timeout_seconds].")
@option(
    "--node-budget",
    "node_budget",
    type=int,
    default=None,
    help="Search node budget [default: recognizer.node_budget].",
)
@option(
    "--permute/--fixed-rows",
    "permute",
    default=None,
    help="Match rows up to permutation instead of binding row i to node i [default: recognizer.policy].",
)
@output_option()
@click.pass_context
def cli_recognize(
    ctx: click.Context,
    matrix_file: TextIO,
    kind: str | None,
    mode: str,
    max_n: int | None,
    timeout: float | None,
    node_budget: int | None,
    permute: bool | None,
    output: Path | None,
) -> None:
    """Decide whether a matrix is the DCM (or CDCM) of some graph.

    Exits 0 with a witness graph, 1 when no graph exists, and 3 when a budget
    ran out before the search could decide.
    """
    settings = toolkit_settings(ctx, "recognize").recognizer
    policy = settings.policy
    if permute is not None:
        policy = MatchPolicy.UP_TO_PERMUTATION if permute else MatchPolicy.FIXED_ROWS
    try:
        limits = SearchLimits(
            max_n=settings.max_n if max_n is None else max_n,
            time_budget_s=settings.timeout_seconds if timeout is None else timeout,
            node_budget=settings.node_budget if node_budget is None else node_budget,
            policy=policy,
        )
    except ValueError as exc:
        fail(ctx, "recognize", exc)
    extra = {"command": "recognize", "mode": mode, "policy": policy.value, "max_n": limits.max_n}
    with lib_log_rich.runtime.bind(job_id="cli-recognize", extra=extra), domain_errors(ctx, "recognize"):
        matrix = parse_matrix(matrix_file.read(), MatrixKind(kind) if kind else None)
        outcome = recognize(matrix, Orientation(mode), limits)
        logger.info(
            "Recognition finished",
            extra={"n": matrix.n, "verdict": outcome.verdict.value, "explored": outcome.stats.explored},
        )
        emit(render_outcome(outcome), output)
        finish(ctx, outcome.verdict)


__all__ = ["cli_recognize", "render_outcome"]
