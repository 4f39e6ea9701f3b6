"""The ``random-graph`` command: seeded G(n, p) samples in the graph text format."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING

import lib_log_rich.runtime
import numpy as np
import rich_click as click

from dcm_toolkit.adapters.formats import render_graph
from dcm_toolkit.domain.enums import Orientation
from dcm_toolkit.domain.graphs import random_graph

from ..constants import CLICK_CONTEXT_SETTINGS
from ..output import emit, output_option
from ..typed_click import option
from ._common import toolkit_settings

if TYPE_CHECKING:
    from pathlib import Path

logger = logging.getLogger(__name__)


@click.command("random-graph", context_settings=CLICK_CONTEXT_SETTINGS)
@option("--n", "n", type=click.IntRange(min=1), required=True, help="Number of nodes.")
@option("--p", "p", type=click.FloatRange(0.0, 1.0), default=0.5, show_default=True, help="Arc probability.")
@option("--directed/--undirected", default=True, show_default=True, help="Sample arcs or edges.")
@option("--seed", type=click.IntRange(min=0), default=None, help="Generator seed [default: generator.seed].")
@output_option()
@click.pass_context
def cli_random_graph(
    ctx: click.Context, n: int, p: float, directed: bool, seed: int | None, output: Path | None
) -> None:
    """Print a random graph; the same seed always gives the same graph."""
    resolved_seed = toolkit_settings(ctx, "random-graph").generator.seed if seed is None else seed
    orientation = Orientation.DIRECTED if directed else Orientation.UNDIRECTED
    extra = {"command": "random-graph", "n": n, "p": p, "orientation": orientation.value, "seed": resolved_seed}
    with lib_log_rich.runtime.bind(job_id="cli-random-graph", extra=extra):
        graph = random_graph(n, p, orientation, np.random.default_rng(resolved_seed))
        logger.info("Sampled random graph", extra={"arcs": len(graph.arcs)})
        emit(render_graph(graph, [f"seed={resolved_seed} p={p:g}"]), output)


__all__ = ["cli_random_graph"]
