"""Text codecs: graph, matrix, sequence, three-partition and report files."""

from __future__ import annotations

import pytest

from dcm_toolkit.adapters.formats import (
    layout_comments,
    parse_graph,
    parse_matrix,
    parse_sequence,
    parse_solution,
    parse_tpp,
    render_graph,
    render_matrix,
    render_outcome,
    render_report,
    render_sequence,
)
from dcm_toolkit.domain.enums import MatrixKind, Orientation, ScreenRule, TppStatus
from dcm_toolkit.domain.errors import FormatError
from dcm_toolkit.domain.graphs import Graph
from dcm_toolkit.domain.matrices import CdcMatrix, DcMatrix
from dcm_toolkit.domain.reduction import TppInstance, TppOutcome, layout_of
from dcm_toolkit.domain.screening import ScreenFailure, ScreenReport

# graphs


@pytest.mark.os_agnostic
def test_graph_file_with_comments_and_blank_lines_parses() -> None:
    text = "# sample\nU 4\n\n0 1   # first\n3 2\n"

    g = parse_graph(text)

    assert g.orientation is Orientation.UNDIRECTED
    assert g.edges() == [(0, 1), (2, 3)]


@pytest.mark.os_agnostic
def test_a_rendered_graph_parses_back_to_itself(fig1_graph: Graph) -> None:
    text = render_graph(fig1_graph, ["fig"])

    assert text.startswith("D 8\n# fig\n")
    assert parse_graph(text) == fig1_graph


@pytest.mark.os_agnostic
@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("", "graph file is empty"),
        ("D\n", "line 1: expected header"),
        ("X 3\n", "line 1: unknown orientation header 'X'"),
        ("D 0\n", "line 1: node count must be positive"),
        ("D 2\n0 1 1\n", "line 2: expected two node ids, got 3"),
        ("D 2\n1 1\n", "line 2: self-loop at node 1"),
        ("D 2\n0 2\n", r"line 2: node id outside \[0, 2\)"),
        ("U 2\n0 1\n1 0\n", "line 3: duplicate edge 1 -- 0"),
        ("D 2\n0 one\n", "line 2: expected integers, got 'one'"),
    ],
)
def test_malformed_graph_files_name_the_offending_line(text: str, message: str) -> None:
    with pytest.raises(FormatError, match=message):
        parse_graph(text)


@pytest.mark.os_agnostic
def test_opposite_arcs_are_distinct_in_a_directed_file() -> None:
    assert parse_graph("D 2\n0 1\n1 0\n").edges() == [(0, 1), (1, 0)]


# matrices


@pytest.mark.os_agnostic
def test_the_marker_line_decides_the_kind() -> None:
    assert isinstance(parse_matrix("cdcm\n1 2\n1 2\n"), CdcMatrix)
    assert isinstance(parse_matrix("DCM\n1 1\n1 1\n"), DcMatrix)


@pytest.mark.os_agnostic
def test_an_unmarked_matrix_takes_the_requested_kind() -> None:
    assert parse_matrix("1 1\n1 1\n", MatrixKind.CDCM) == CdcMatrix.from_rows([[1, 1], [1, 1]])


@pytest.mark.os_agnostic
@pytest.mark.parametrize(
    ("text", "kind", "message"),
    [
        ("1 1\n1 1\n", None, "missing DCM/CDCM marker"),
        ("DCM\n", None, "matrix has no rows"),
        ("DCM\n1 1\n1 1\n", MatrixKind.CDCM, "line 1: file is marked DCM but CDCM was requested"),
        ("DCM\n1 1\n1\n", None, "line 3: expected 2 entries, got 1"),
        ("DCM\n1 1 1\n1 1 1\n", None, "line 2: expected 2 entries, got 3"),
        ("DCM\n1 -1\n1 1\n", None, "negative entry at row 0, column 1"),
    ],
)
def test_malformed_matrix_files_are_refused(text: str, kind: MatrixKind | None, message: str) -> None:
    with pytest.raises(FormatError, match=message):
        parse_matrix(text, kind)


@pytest.mark.os_agnostic
def test_a_matrix_renders_with_its_marker(fig1_cdcm: CdcMatrix) -> None:
    lines = render_matrix(fig1_cdcm).splitlines()

    assert lines[0] == "CDCM"
    assert lines[1] == "1 3 6 8 8 8 8 8"
    assert len(lines) == 9


# sequences


@pytest.mark.os_agnostic
def test_a_sequence_renders_on_one_line() -> None:
    assert render_sequence((3, 2, 2)) == "3 2 2\n"
    assert parse_sequence("  3 2 2 \n") == (3, 2, 2)


@pytest.mark.os_agnostic
def test_an_empty_sequence_file_is_refused() -> None:
    with pytest.raises(FormatError, match="empty"):
        parse_sequence("# nothing\n\n")


# three-partition


@pytest.mark.os_agnostic
@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("2\n", "got 1 lines"),
        ("0\n\n1 2 3\n", "line 1: expected a positive group count"),
        ("1 2\n1 2 3\n", "line 1: expected a positive group count"),
        ("2\n1 2 3\n", "line 2: expected 3m = 6 integers, got 3"),
    ],
)
def test_malformed_instance_files_are_refused(text: str, message: str) -> None:
    with pytest.raises(FormatError, match=message):
        parse_tpp(text)


@pytest.mark.os_agnostic
def test_instance_values_keep_their_file_order() -> None:
    assert parse_tpp("# example\n1\n3 5 4\n") == (3, 5, 4)


@pytest.mark.os_agnostic
def test_a_solution_file_without_a_status_line_parses() -> None:
    assert parse_solution("0 3 5\n1 2 4\n") == [[0, 3, 5], [1, 2, 4]]


@pytest.mark.os_agnostic
@pytest.mark.parametrize(
    ("text", "message"),
    [
        ("negative\n", "line 1: solution file reports negative"),
        ("positive\n", "holds no triples"),
        ("0 1\n", "line 1: expected three indices, got 2"),
    ],
)
def test_malformed_solution_files_are_refused(text: str, message: str) -> None:
    with pytest.raises(FormatError, match=message):
        parse_solution(text)


@pytest.mark.os_agnostic
def test_an_undecided_outcome_prints_its_reason() -> None:
    outcome = TppOutcome(TppStatus.UNKNOWN, reason="node budget exhausted")

    assert render_outcome(outcome, TppInstance((3, 2, 1))) == "unknown\n# node budget exhausted\n"


@pytest.mark.os_agnostic
def test_layout_comments_name_every_node() -> None:
    comments = layout_comments(layout_of(TppInstance((2, 1, 1))))

    assert comments[0] == "node 0 role x_0"
    assert comments[-1] == "node 7 role z_0"
    assert len(comments) == 8


# reports


@pytest.mark.os_agnostic
def test_a_column_rule_prints_a_dash_for_the_row() -> None:
    report = ScreenReport((ScreenFailure(ScreenRule.COLUMN_GRAPHICAL, None, 2, "not graphical"),))

    assert render_report(report) == "REJECT column-graphical row=- col=2 not graphical\n"
    assert render_report(report, machine=True) == 'rule=column-graphical row=- col=2 detail="not graphical"\n'


@pytest.mark.os_agnostic
def test_a_row_rule_without_a_column_omits_it_in_the_human_form() -> None:
    report = ScreenReport((ScreenFailure(ScreenRule.GOODNESS, 4, None, 'row "x" is not good'),))

    assert render_report(report) == 'REJECT goodness row=4 row "x" is not good\n'
    assert render_report(report, machine=True) == 'rule=goodness row=4 col=- detail="row \\"x\\" is not good"\n'


@pytest.mark.os_agnostic
def test_exhausted_rows_are_noted_after_the_verdict() -> None:
    report = ScreenReport(exhausted_rows=(1, 3))

    assert render_report(report) == "PASS\n# exact subset search fell back to the relaxed bound for rows 1 3\n"
