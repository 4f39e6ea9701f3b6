"""Three-partition commands: gadget matrix and graph, exact solving, validation and transforms.

Instance files list their values in any order; indices in solution files
and in solver output refer to the values sorted nonincreasingly.

Contents:
    * :func:`cli_reduce` - gadget matrix ``M(a)``.
    * :func:`cli_gadget` - gadget graph from a given or computed partition.
    * :func:`cli_solve_tpp` - exact solver.
    * :func:`cli_validate_tpp` - lenient / tpp / hardened validation.
    * :func:`cli_transform_tpp` - scale and shift an instance.
"""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, TextIO

import lib_log_rich.runtime
import orjson
import rich_click as click

from dcm_toolkit.adapters.formats import (
    layout_comments,
    parse_solution,
    parse_tpp,
    render_graph,
    render_matrix,
    render_outcome,
    render_tpp,
)
from dcm_toolkit.domain.enums import ValidationLevel
from dcm_toolkit.domain.reduction import (
    DEFAULT_GAP,
    TppInstance,
    TppSolution,
    build_gadget,
    build_matrix,
    scale,
    shift,
    solve_tpp,
    validate_instance,
)

from ..constants import CLICK_CONTEXT_SETTINGS, TEXT_ENCODING
from ..exit_codes import ExitCode
from ..output import emit, output_option
from ..typed_click import option
from ._common import domain_errors, finish, input_argument, toolkit_settings

if TYPE_CHECKING:
    from pathlib import Path

    from dcm_toolkit.domain.reduction import InstanceVerdict

logger = logging.getLogger(__name__)


def _read_instance(handle: TextIO) -> TppInstance:
    return TppInstance.from_values(parse_tpp(handle.read()))


@click.command("reduce", context_settings=CLICK_CONTEXT_SETTINGS)
@input_argument("tpp_file")
@output_option()
@click.pass_context
def cli_reduce(ctx: click.Context, tpp_file: TextIO, output: Path | None) -> None:
    """Print the gadget DCM ``M(a)`` of a three-partition instance.

    ``M(a)`` is the DCM of an undirected graph exactly when the instance
    splits into triples of equal sum (for hardened instances).
    """
    with lib_log_rich.runtime.bind(job_id="cli-reduce", extra={"command": "reduce"}), domain_errors(ctx, "reduce"):
        instance = _read_instance(tpp_file)
        logger.info("Building gadget matrix", extra={"m": instance.m, "s": instance.s})
        emit(render_matrix(build_matrix(instance)), output)


@click.command("gadget", context_settings=CLICK_CONTEXT_SETTINGS)
@input_argument("tpp_file")
@option(
    "--solution",
    "solution_file",
    type=click.File("r", encoding=TEXT_ENCODING),
    default=None,
    help="Partition to build from (one line of three indices per triple).",
)
@option("--solve", is_flag=True, default=False, help="Find the partition with the exact solver.")
@option("--max-items", "max_items", type=int, default=None, help="Largest 3m solved [default: tpp.max_items].")
@output_option()
@click.pass_context
def cli_gadget(
    ctx: click.Context,
    tpp_file: TextIO,
    solution_file: TextIO | None,
    solve: bool,
    max_items: int | None,
    output: Path | None,
) -> None:
    """Print the gadget graph ``G(a)`` for a solved instance, with node roles as comments.

    Exactly one of ``--solution`` and ``--solve`` is required. With
    ``--solve``, a negative instance exits 1 and an undecided one exits 3.
    """
    if (solution_file is None) == (not solve):
        raise click.UsageError("give exactly one of --solution and --solve")
    limit = toolkit_settings(ctx, "gadget").tpp.max_items if max_items is None else max_items
    extra = {"command": "gadget", "solve": solve}
    with lib_log_rich.runtime.bind(job_id="cli-gadget", extra=extra), domain_errors(ctx, "gadget"):
        instance = _read_instance(tpp_file)
        if solution_file is not None:
            solution = TppSolution.of(parse_solution(solution_file.read()))
        else:
            outcome = solve_tpp(instance, max_items=limit)
            if outcome.solution is None:
                emit(render_outcome(outcome, instance), output)
                finish(ctx, outcome.status)
                return
            solution = outcome.solution
        graph, layout = build_gadget(instance, solution)
        logger.info("Built gadget graph", extra={"n": graph.n, "edges": len(graph.edges())})
        emit(render_graph(graph, layout_comments(layout)), output)


@click.command("solve-tpp", context_settings=CLICK_CONTEXT_SETTINGS)
@input_argument("tpp_file")
@option("--max-items", "max_items", type=int, default=None, help="Largest 3m solved [default: tpp.max_items].")
@option("--node-budget", "node_budget", type=int, default=None, help="Stop with 'unknown' after this many nodes.")
@output_option()
@click.pass_context
def cli_solve_tpp(
    ctx: click.Context, tpp_file: TextIO, max_items: int | None, node_budget: int | None, output: Path | None
) -> None:
    """Solve a three-partition instance exactly.

    Prints ``positive`` and the triples, ``negative``, or ``unknown``; exits
    0, 1 or 3 accordingly.
    """
    limit = toolkit_settings(ctx, "solve-tpp").tpp.max_items if max_items is None else max_items
    extra = {"command": "solve-tpp", "max_items": limit}
    with lib_log_rich.runtime.bind(job_id="cli-solve-tpp", extra=extra), domain_errors(ctx, "solve-tpp"):
        instance = _read_instance(tpp_file)
        outcome = solve_tpp(instance, max_items=limit, node_budget=node_budget)
        logger.info("Three-partition solved", extra={"status": outcome.status.value, "explored": outcome.explored})
        emit(render_outcome(outcome, instance), output)
        finish(ctx, outcome.status)


def render_verdict(verdict: InstanceVerdict) -> str:
    """One ``key=value`` line describing a validation verdict.

    Example:
        >>> from dcm_toolkit.domain.reduction import InstanceVerdict
        >>> print(render_verdict(InstanceVerdict(ValidationLevel.TPP, "upper-bound", "a_1 = 9")), end="")
        invalid level=tpp rule=upper-bound detail="a_1 = 9"
    """
    if verdict.valid:
        return f"valid level={verdict.level.value}\n"
    detail = orjson.dumps(verdict.detail).decode()
    return f"invalid level={verdict.level.value} rule={verdict.rule} detail={detail}\n"


@click.command("validate-tpp", context_settings=CLICK_CONTEXT_SETTINGS)
@input_argument("tpp_file")
@option(
    "--level",
    type=click.Choice([level.value for level in ValidationLevel]),
    default=ValidationLevel.HARDENED.value,
    show_default=True,
    help="Rule set to check.",
)
@option("--gap", type=int, default=DEFAULT_GAP, show_default=True, help="Minimum gap and smallest entry (hardened).")
@output_option()
@click.pass_context
def cli_validate_tpp(ctx: click.Context, tpp_file: TextIO, level: str, gap: int, output: Path | None) -> None:
    """Check an instance against a validation level; exits 0 when valid and 1 otherwise."""
    extra = {"command": "validate-tpp", "level": level, "gap": gap}
    with lib_log_rich.runtime.bind(job_id="cli-validate-tpp", extra=extra), domain_errors(ctx, "validate-tpp"):
        values = sorted(parse_tpp(tpp_file.read()), reverse=True)
        verdict = validate_instance(values, ValidationLevel(level), gap)
        logger.info("Instance validated", extra={"valid": verdict.valid, "rule": verdict.rule})
        emit(render_verdict(verdict), output)
        if not verdict.valid:
            ctx.exit(int(ExitCode.NEGATIVE))


@click.command("transform-tpp", context_settings=CLICK_CONTEXT_SETTINGS)
@input_argument("tpp_file")
@option("--scale", "factor", type=int, default=1, show_default=True, help="Multiply every entry by K.")
@option("--shift", "offset", type=int, default=0, show_default=True, help="Then add C to every entry.")
@output_option()
@click.pass_context
def cli_transform_tpp(ctx: click.Context, tpp_file: TextIO, factor: int, offset: int, output: Path | None) -> None:
    """Scale, then shift, an instance; both keep its answer unchanged."""
    extra = {"command": "transform-tpp", "scale": factor, "shift": offset}
    with lib_log_rich.runtime.bind(job_id="cli-transform-tpp", extra=extra), domain_errors(ctx, "transform-tpp"):
        instance = shift(scale(_read_instance(tpp_file), factor), offset)
        logger.info("Instance transformed", extra={"t": str(instance.t)})
        emit(render_tpp(instance), output)


__all__ = [
    "cli_gadget",
    "cli_reduce",
    "cli_solve_tpp",
    "cli_transform_tpp",
    "cli_validate_tpp",
    "render_verdict",
]
