"""The ``check`` command: necessary-condition screen of a candidate matrix."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, TextIO

import lib_log_rich.runtime
import rich_click as click

from dcm_toolkit.adapters.formats import parse_matrix, render_report
from dcm_toolkit.domain.enums import BoundMode, MatrixKind, Orientation
from dcm_toolkit.domain.screening import PredecessorBoundConfig, screen

from ..constants import CLICK_CONTEXT_SETTINGS
from ..output import emit, output_option
from ..typed_click import option
from ._common import domain_errors, finish, input_argument, kind_of, kind_option, mode_option, toolkit_settings

if TYPE_CHECKING:
    from pathlib import Path

logger = logging.getLogger(__name__)


@click.command("check", context_settings=CLICK_CONTEXT_SETTINGS)
@input_argument("matrix_file")
@kind_option()
@mode_option()
@option(
    "--exact-bounds/--relaxed-bounds",
    "exact_bounds",
    default=None,
    help="Search for an actual dominating predecessor subset per row [default: screening.bound_mode].",
)
@option(
    "--require-strong/--no-require-strong",
    "require_strong",
    default=None,
    help="Reject rows that do not reach every node [default: screening.require_strong].",
)
@option("--machine", is_flag=True, default=False, help="Print key=value records instead of the human report.")
@output_option()
@click.pass_context
def cli_check(
    ctx: click.Context,
    matrix_file: TextIO,
    kind: str | None,
    mode: str,
    exact_bounds: bool | None,
    require_strong: bool | None,
    machine: bool,
    output: Path | None,
) -> None:
    """Screen a DCM or CDCM candidate with polynomial necessary conditions.

    Exits 0 when every rule passes and 1 when some rule rejects. A pass does
    not prove the matrix belongs to a graph; a rejection does prove it does not.
    """
    settings = toolkit_settings(ctx, "check").screening
    bound_mode = settings.bound_mode
    if exact_bounds is not None:
        bound_mode = BoundMode.EXACT if exact_bounds else BoundMode.RELAXED
    strong = settings.require_strong if require_strong is None else require_strong
    extra = {"command": "check", "mode": mode, "bound_mode": bound_mode.value, "require_strong": strong}
    with lib_log_rich.runtime.bind(job_id="cli-check", extra=extra), domain_errors(ctx, "check"):
        matrix = parse_matrix(matrix_file.read(), MatrixKind(kind) if kind else None)
        cfg = PredecessorBoundConfig(mode=bound_mode, subset_budget=settings.subset_budget)
        report = screen(matrix, kind_of(matrix), Orientation(mode), cfg, require_strong=strong)
        logger.info("Screen finished", extra={"n": matrix.n, "verdict": report.verdict.value})
        emit(render_report(report, machine=machine), output)
        finish(ctx, report.verdict)


__all__ = ["cli_check"]
