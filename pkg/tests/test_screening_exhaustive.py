"""Screening soundness over every small graph and a long seeded sample of larger ones."""

from __future__ import annotations

import numpy as np
import pytest

from dcm_toolkit.domain.enums import BoundMode, MatrixKind, Orientation
from dcm_toolkit.domain.graphs import Graph, all_graphs, is_strongly_connected, random_graph
from dcm_toolkit.domain.matrices import cdcm_of, dcm_of
from dcm_toolkit.domain.screening import PredecessorBoundConfig, screen

BOUND_MODES = (PredecessorBoundConfig(mode=BoundMode.RELAXED), PredecessorBoundConfig(mode=BoundMode.EXACT))
SAMPLE_SIZE = 1000
SAMPLE_SEED = 20240601


def _assert_every_screen_passes(g: Graph) -> None:
    strong = is_strongly_connected(g)
    for matrix, kind in ((dcm_of(g), MatrixKind.DCM), (cdcm_of(g), MatrixKind.CDCM)):
        for cfg in BOUND_MODES:
            report = screen(matrix, kind, g.orientation, cfg, require_strong=strong)
            assert report.passed, (g.edges(), kind, cfg.mode, report.failures)


@pytest.mark.os_agnostic
@pytest.mark.slow
@pytest.mark.parametrize(
    ("n", "orientation"),
    [
        (n, orientation)
        for orientation, largest in ((Orientation.UNDIRECTED, 5), (Orientation.DIRECTED, 4))
        for n in range(1, largest + 1)
    ],
)
def test_no_small_graph_is_ever_rejected(n: int, orientation: Orientation) -> None:
    for g in all_graphs(n, orientation):
        _assert_every_screen_passes(g)


@pytest.mark.os_agnostic
@pytest.mark.slow
@pytest.mark.parametrize("orientation", list(Orientation))
def test_a_thousand_seeded_graphs_of_four_to_eight_nodes_are_never_rejected(orientation: Orientation) -> None:
    rng = np.random.default_rng(SAMPLE_SEED)

    for _ in range(SAMPLE_SIZE):
        n = int(rng.integers(4, 9))
        g = random_graph(n, float(rng.random()), orientation, rng)
        _assert_every_screen_passes(g)
