"""Domain error hierarchy: one root, ValueError compatibility, line-tagged format errors."""

from __future__ import annotations

import pytest

from dcm_toolkit.domain.errors import (
    DcmToolkitError,
    DimensionMismatchError,
    FormatError,
    GraphError,
    InstanceError,
    InvalidSolutionError,
    MalformedColumnZeroError,
    MatrixError,
    NodeOutOfRangeError,
    NotCumulativeError,
    OrientationError,
    SequenceError,
)


@pytest.mark.os_agnostic
@pytest.mark.parametrize(
    "error_type",
    [
        GraphError,
        NodeOutOfRangeError,
        OrientationError,
        MatrixError,
        MalformedColumnZeroError,
        NotCumulativeError,
        DimensionMismatchError,
        SequenceError,
        InstanceError,
        InvalidSolutionError,
        FormatError,
    ],
)
def test_every_domain_error_is_a_toolkit_error_and_a_value_error(error_type: type[Exception]) -> None:
    assert issubclass(error_type, DcmToolkitError)
    assert issubclass(error_type, ValueError)


@pytest.mark.os_agnostic
def test_node_out_of_range_is_also_an_index_error() -> None:
    with pytest.raises(IndexError, match="node 9"):
        raise NodeOutOfRangeError("node 9 outside [0, 8)")


@pytest.mark.os_agnostic
def test_when_a_format_error_has_a_line_the_message_names_it() -> None:
    exc = FormatError("expected two node ids", line=4)

    assert str(exc) == "line 4: expected two node ids"
    assert exc.line == 4


@pytest.mark.os_agnostic
def test_when_a_format_error_has_no_line_the_message_is_unchanged() -> None:
    exc = FormatError("graph file is empty")

    assert str(exc) == "graph file is empty"
    assert exc.line is None
