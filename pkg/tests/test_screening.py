"""Necessary-condition screening: each rule, exact subset search, and soundness on real graphs."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dcm_toolkit.domain.enums import BoundMode, MatrixKind, Orientation, ScreenRule, ScreenVerdict
from dcm_toolkit.domain.errors import OrientationError
from dcm_toolkit.domain.graphs import Graph, is_strongly_connected, random_graph
from dcm_toolkit.domain.matrices import CdcMatrix, DcMatrix, cdcm_of, dcm_of
from dcm_toolkit.domain.screening import (
    PredecessorBoundConfig,
    ScreenFailure,
    ScreenReport,
    check_basic,
    check_columns_graphical,
    check_predecessor_bounds,
    screen,
)

EXACT = PredecessorBoundConfig(mode=BoundMode.EXACT)

# row 0 needs two predecessors; the relaxed column maxima cover it but no actual pair does
NO_DOMINATING_PAIR = CdcMatrix.from_rows([[1, 3, 6, 9], [1, 3, 3, 4], [1, 2, 4, 4], [1, 2, 4, 4]])


def _rules(report: ScreenReport) -> list[ScreenRule]:
    return [failure.rule for failure in report.failures]


# basic rules


@pytest.mark.os_agnostic
def test_a_row_not_starting_with_one_fails_column_zero() -> None:
    report = check_basic(CdcMatrix.from_rows([[1, 2], [2, 2]]))

    assert report.failures == (ScreenFailure(ScreenRule.COLUMN_ZERO, 1, 0, "column 0 is 2, expected 1"),)
    assert report.verdict is ScreenVerdict.REJECT


@pytest.mark.os_agnostic
def test_a_row_that_rises_after_a_plateau_fails_goodness() -> None:
    report = check_basic(CdcMatrix.from_rows([[1, 2, 2, 3], [1, 2, 3, 4], [1, 2, 3, 4], [1, 2, 3, 4]]))

    assert _rules(report) == [ScreenRule.GOODNESS]
    assert report.failures[0].row == 0


@pytest.mark.os_agnostic
def test_require_strong_rejects_rows_that_stop_short() -> None:
    cdcm = cdcm_of(Graph.empty(2))

    assert check_basic(cdcm).passed
    assert _rules(check_basic(cdcm, require_strong=True)) == [ScreenRule.VERY_GOOD, ScreenRule.VERY_GOOD]


@pytest.mark.os_agnostic
def test_in_degrees_are_read_off_column_one(fig1_cdcm: CdcMatrix) -> None:
    assert check_basic(fig1_cdcm).in_degrees == (2, 1, 2, 2, 3, 1, 2, 2)


# predecessor bounds


@pytest.mark.os_agnostic
def test_too_few_rows_below_a_row_fail_the_count_bound() -> None:
    cdcm = CdcMatrix.from_rows([[1, 2, 2, 2], [1, 3, 4, 4], [1, 3, 4, 4], [1, 3, 4, 4]])

    report = check_predecessor_bounds(cdcm)

    assert _rules(report) == [ScreenRule.PREDECESSOR_COUNT]
    assert report.failures[0].row == 0


@pytest.mark.os_agnostic
def test_a_row_growing_faster_than_its_predecessors_fails_the_sum_bound() -> None:
    cdcm = CdcMatrix.from_rows([[1, 2, 4, 4], [1, 2, 2, 2], [1, 2, 2, 2], [1, 2, 2, 2]])

    report = check_predecessor_bounds(cdcm)

    assert _rules(report) == [ScreenRule.PREDECESSOR_SUM]
    assert (report.failures[0].row, report.failures[0].col) == (0, 2)


@pytest.mark.os_agnostic
def test_relaxed_bounds_accept_what_only_the_subset_search_rejects() -> None:
    assert check_predecessor_bounds(NO_DOMINATING_PAIR).passed

    exact = check_predecessor_bounds(NO_DOMINATING_PAIR, EXACT)

    assert _rules(exact) == [ScreenRule.PREDECESSOR_SUBSET]
    assert exact.failures[0].row == 0


@pytest.mark.os_agnostic
def test_an_exhausted_subset_search_keeps_the_relaxed_verdict() -> None:
    cfg = PredecessorBoundConfig(mode=BoundMode.EXACT, subset_budget=0)

    report = check_predecessor_bounds(NO_DOMINATING_PAIR, cfg)

    assert report.passed
    assert 0 in report.exhausted_rows


@pytest.mark.os_agnostic
def test_a_negative_subset_budget_is_refused() -> None:
    with pytest.raises(ValueError, match="subset_budget"):
        PredecessorBoundConfig(subset_budget=-1)


# column graphicality


@pytest.mark.os_agnostic
def test_an_odd_column_sum_is_not_graphical() -> None:
    report = check_columns_graphical(DcMatrix.from_rows([[1, 1, 1], [1, 1, 1], [1, 1, 1]]))

    assert _rules(report) == [ScreenRule.COLUMN_GRAPHICAL]
    assert report.failures[0].col == 1
    assert report.failures[0].row is None


@pytest.mark.os_agnostic
def test_column_graphicality_is_refused_for_directed_candidates(fig1_dcm: DcMatrix) -> None:
    with pytest.raises(OrientationError):
        check_columns_graphical(fig1_dcm, Orientation.DIRECTED)


# full screen


@pytest.mark.os_agnostic
def test_a_decreasing_cdcm_row_is_a_conversion_failure() -> None:
    report = screen(CdcMatrix.from_rows([[1, 2], [1, 0]]), MatrixKind.CDCM, Orientation.DIRECTED)

    assert ScreenRule.CONVERSION in _rules(report)
    assert report.verdict is ScreenVerdict.REJECT


@pytest.mark.os_agnostic
def test_column_rules_are_listed_after_row_rules() -> None:
    report = screen(DcMatrix.from_rows([[1, 1, 1], [1, 1, 1], [1, 1, 1]]), MatrixKind.DCM, Orientation.UNDIRECTED)

    assert report.failures[-1].rule is ScreenRule.COLUMN_GRAPHICAL
    assert all(failure.row is not None for failure in report.failures[:-1])


@pytest.mark.os_agnostic
def test_the_worked_example_passes_every_rule(fig1_dcm: DcMatrix, fig1_cdcm: CdcMatrix) -> None:
    assert screen(fig1_dcm, MatrixKind.DCM, Orientation.DIRECTED, EXACT, require_strong=True).passed
    assert screen(fig1_cdcm, MatrixKind.CDCM, Orientation.DIRECTED, EXACT, require_strong=True).passed


@pytest.mark.os_agnostic
@given(
    n=st.integers(min_value=1, max_value=8),
    p=st.floats(min_value=0.0, max_value=1.0),
    seed=st.integers(min_value=0, max_value=2**32 - 1),
    orientation=st.sampled_from(list(Orientation)),
)
@settings(max_examples=300, deadline=None)
def test_screen_never_rejects_the_matrix_of_a_real_graph(
    n: int, p: float, seed: int, orientation: Orientation
) -> None:
    g = random_graph(n, p, orientation, np.random.default_rng(seed))
    strong = is_strongly_connected(g)

    for matrix, kind in ((dcm_of(g), MatrixKind.DCM), (cdcm_of(g), MatrixKind.CDCM)):
        for cfg in (None, EXACT):
            report = screen(matrix, kind, orientation, cfg, require_strong=strong)
            assert report.passed, report.failures
