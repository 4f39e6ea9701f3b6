"""Necessary conditions for a matrix to be the (C)DCM of some graph.

The screen is sound: it never rejects the (C)DCM of an actual graph. It is
not complete, and a pass says nothing about whether a graph exists.

Rules:
    * ``column-0`` - every row starts with 1.
    * ``goodness`` / ``very-good`` - every CDCM row is good (very good when
      strong connectivity is required).
    * ``predecessor-count`` / ``predecessor-sum`` / ``predecessor-subset`` -
      row ``i`` with in-degree ``nu`` needs ``nu`` other rows that, shifted one
      column right, stay termwise below it while their sum stays above it.
    * ``column-graphical`` - for undirected graphs every DCM column is a
      graphical degree sequence (column ``k`` is the degree sequence of ``G^k``).
    * ``conversion`` - a CDCM candidate with a decreasing row.

The upper predecessor bound counts the head node itself, which need not lie in
any predecessor's neighbourhood of a directed graph. Undirected graphs with at
least one neighbour already contain it, so the bound is applied without slack.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import TYPE_CHECKING

import numpy as np

from .enums import BoundMode, MatrixKind, Orientation, ScreenRule, ScreenVerdict
from .errors import NotCumulativeError, OrientationError
from .matrices import CdcMatrix, DcMatrix, cdcm_to_dcm, goodness
from .sequences import column_sequence, erdos_gallai_check

if TYPE_CHECKING:
    from .matrices import CountMatrix, IntArray

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class ScreenFailure:
    """One violated rule.

    Attributes:
        rule: Which rule failed.
        row: Offending row, or None for column rules.
        col: Offending column when the rule is column specific.
        detail: Human-readable explanation.
    """

    rule: ScreenRule
    row: int | None
    col: int | None
    detail: str


@dataclass(frozen=True, slots=True)
class ScreenReport:
    """Aggregated result of one or more screening rules.

    Attributes:
        failures: Violations ordered by ascending row, column rules last.
        in_degrees: ``nu(i) = m_1(i) - 1`` per row as read off the candidate.
        exhausted_rows: Rows whose exact subset search ran out of budget and
            fell back to the relaxed verdict.

    Example:
        >>> ScreenReport().verdict
        <ScreenVerdict.PASS: 'pass'>
    """

    failures: tuple[ScreenFailure, ...] = ()
    in_degrees: tuple[int, ...] = ()
    exhausted_rows: tuple[int, ...] = ()

    @property
    def verdict(self) -> ScreenVerdict:
        return ScreenVerdict.REJECT if self.failures else ScreenVerdict.PASS

    @property
    def passed(self) -> bool:
        return not self.failures

    def merge(self, other: ScreenReport) -> ScreenReport:
        """Combine two reports, keeping failures sorted by row."""
        failures = sorted(
            (*self.failures, *other.failures),
            key=lambda f: (f.row is None, f.row or 0, f.col or 0),
        )
        return ScreenReport(
            failures=tuple(failures),
            in_degrees=self.in_degrees or other.in_degrees,
            exhausted_rows=tuple(sorted({*self.exhausted_rows, *other.exhausted_rows})),
        )


@dataclass(frozen=True, slots=True)
class PredecessorBoundConfig:
    """How the predecessor bounds are checked.

    Attributes:
        mode: ``relaxed`` compares against the largest candidates per column,
            ``exact`` also searches for a real dominating subset.
        subset_budget: Search nodes allowed per row in exact mode.

    Example:
        >>> PredecessorBoundConfig(subset_budget=-1)
        Traceback (most recent call last):
        ...
        ValueError: subset_budget must be >= 0, got -1
    """

    mode: BoundMode = BoundMode.RELAXED
    subset_budget: int = field(default=100_000)

    def __post_init__(self) -> None:
        if self.subset_budget < 0:
            raise ValueError(f"subset_budget must be >= 0, got {self.subset_budget}")


def _in_degrees(entries: IntArray) -> tuple[int, ...]:
    if entries.shape[0] < 2:  # noqa: PLR2004
        return (0,) * entries.shape[0]
    return tuple(max(int(x) - 1, 0) for x in entries[:, 1])


def check_basic(matrix: CdcMatrix, *, require_strong: bool = False) -> ScreenReport:
    """Column 0 all ones and every row good (very good when ``require_strong``).

    Example:
        >>> check_basic(CdcMatrix.from_rows([[1, 2], [2, 2]])).failures[0].rule
        <ScreenRule.COLUMN_ZERO: 'column-0'>
    """
    failures: list[ScreenFailure] = []
    for i, row in enumerate(matrix.rows()):
        if row[0] != 1:
            failures.append(ScreenFailure(ScreenRule.COLUMN_ZERO, i, 0, f"column 0 is {row[0]}, expected 1"))
            continue
        verdict = goodness(row)
        if not verdict.is_good:
            failures.append(ScreenFailure(ScreenRule.GOODNESS, i, None, f"row {list(row)} is not good"))
        elif require_strong and not verdict.is_very_good:
            failures.append(
                ScreenFailure(
                    ScreenRule.VERY_GOOD, i, None, f"row plateaus at {verdict.plateau_value}, expected {matrix.n}"
                )
            )
    return ScreenReport(failures=tuple(failures), in_degrees=_in_degrees(matrix.entries))


class _BudgetExhaustedError(Exception):
    """Internal signal: the subset search spent its node budget."""


class _SubsetSearch:
    """Branch and bound over ``nu``-subsets of candidate rows whose sum dominates a target."""

    def __init__(self, rows: IntArray, target: IntArray, nu: int, budget: int) -> None:
        order = np.argsort(-rows.sum(axis=1), kind="stable")
        self.rows = rows[order]
        self.target = target
        self.nu = nu
        self.budget = budget
        self.expanded = 0

    def _reachable(self, start: int, need: int, partial: IntArray) -> bool:
        best = np.sort(self.rows[start:], axis=0)[-need:].sum(axis=0)
        return bool(np.all(partial + best >= self.target))

    def _search(self, start: int, count: int, partial: IntArray) -> bool:
        self.expanded += 1
        if self.expanded > self.budget:
            raise _BudgetExhaustedError
        need = self.nu - count
        if need == 0:
            return bool(np.all(partial >= self.target))
        if len(self.rows) - start < need or not self._reachable(start, need, partial):
            return False
        return any(
            self._search(idx + 1, count + 1, partial + self.rows[idx])
            for idx in range(start, len(self.rows) - need + 1)
        )

    def run(self) -> bool:
        return self._search(0, 0, np.zeros_like(self.target))


def _check_row_bounds(
    entries: IntArray, i: int, nu: int, cfg: PredecessorBoundConfig, slack: int
) -> tuple[ScreenFailure | None, bool]:
    """Return the failure for row ``i`` (if any) and whether the exact search ran out of budget."""
    target_row = entries[i]
    shifted = entries[:, :-1]
    mask = np.all(shifted <= target_row[1:], axis=1)
    mask[i] = False
    candidates = shifted[mask]
    if len(candidates) < nu:
        detail = f"only {len(candidates)} rows fit below the row, in-degree is {nu}"
        return ScreenFailure(ScreenRule.PREDECESSOR_COUNT, i, None, detail), False

    # columns p = 2..n-1 compared against candidate columns p-1
    upper_rows = candidates[:, 1:]
    target = target_row[2:] - slack
    if target.size == 0:
        return None, False
    best = np.sort(upper_rows, axis=0)[-nu:].sum(axis=0)
    short = np.flatnonzero(best < target)
    if short.size:
        p = int(short[0]) + 2
        detail = f"the {nu} largest candidates sum to {int(best[short[0]])} + {slack} < {int(target_row[p])}"
        return ScreenFailure(ScreenRule.PREDECESSOR_SUM, i, p, detail), False

    if cfg.mode is BoundMode.EXACT:
        search = _SubsetSearch(upper_rows, target, nu, cfg.subset_budget)
        try:
            found = search.run()
        except _BudgetExhaustedError:
            logger.debug("Predecessor subset search exhausted its budget", extra={"row": i})
            return None, True
        if not found:
            detail = f"no {nu} candidate rows dominate the row"
            return ScreenFailure(ScreenRule.PREDECESSOR_SUBSET, i, None, detail), False
    return None, False


def check_predecessor_bounds(
    matrix: CdcMatrix,
    cfg: PredecessorBoundConfig | None = None,
    orientation: Orientation = Orientation.DIRECTED,
) -> ScreenReport:
    """Check the lower and upper predecessor bounds for every row.

    Candidate predecessors of row ``i`` are the other rows ``j`` with
    ``m_{p-1}(j) <= m_p(i)`` for all ``p >= 1``. Relaxed mode rejects when fewer
    than ``nu`` candidates exist or when the ``nu`` largest candidate values of
    some column ``p - 1`` cannot cover ``m_p(i)``. Exact mode then searches for
    an actual ``nu``-subset; budget exhaustion keeps the relaxed verdict and
    records the row in :attr:`ScreenReport.exhausted_rows`.

    Args:
        matrix: Candidate that already passed :func:`check_basic`.
        cfg: Bound mode and budget; relaxed by default.
        orientation: Undirected candidates get the tighter upper bound.
    """
    cfg = cfg or PredecessorBoundConfig()
    entries = matrix.entries
    in_degrees = _in_degrees(entries)
    failures: list[ScreenFailure] = []
    exhausted: list[int] = []
    for i, nu in enumerate(in_degrees):
        if nu == 0:
            continue
        slack = 0 if orientation is Orientation.UNDIRECTED else 1
        failure, ran_out = _check_row_bounds(entries, i, nu, cfg, slack)
        if failure is not None:
            failures.append(failure)
        if ran_out:
            exhausted.append(i)
    return ScreenReport(failures=tuple(failures), in_degrees=in_degrees, exhausted_rows=tuple(exhausted))


def check_columns_graphical(matrix: DcMatrix, orientation: Orientation = Orientation.UNDIRECTED) -> ScreenReport:
    """Every column ``k >= 1`` of an undirected DCM must be graphical.

    Stops at the first failing column.

    Raises:
        OrientationError: If asked to check a directed candidate.

    Example:
        >>> report = check_columns_graphical(DcMatrix.from_rows([[1, 1, 1], [1, 1, 1], [1, 1, 1]]))
        >>> report.failures[0].col
        1
    """
    if orientation is Orientation.DIRECTED:
        raise OrientationError("column graphicality only holds for undirected graphs")
    for k in range(1, matrix.n):
        column = column_sequence(matrix, k)
        if not erdos_gallai_check(column):
            detail = f"column sorted as {list(column.values)} is not graphical"
            return ScreenReport(failures=(ScreenFailure(ScreenRule.COLUMN_GRAPHICAL, None, k, detail),))
    return ScreenReport()


def screen(
    matrix: CountMatrix,
    kind: MatrixKind,
    orientation: Orientation,
    cfg: PredecessorBoundConfig | None = None,
    *,
    require_strong: bool = False,
) -> ScreenReport:
    """Run every applicable rule on a DCM or CDCM candidate.

    Example:
        >>> screen(DcMatrix.from_rows([[0, 0], [0, 0]]), MatrixKind.DCM, Orientation.DIRECTED).verdict
        <ScreenVerdict.REJECT: 'reject'>
    """
    if kind is MatrixKind.DCM:
        dcm: DcMatrix | None = DcMatrix(matrix.entries)
        # column 0 is judged by check_basic, so the prefix sums are taken unchecked
        cdcm = CdcMatrix(np.cumsum(matrix.entries, axis=1))
    else:
        cdcm = CdcMatrix(matrix.entries)
        try:
            dcm = cdcm_to_dcm(cdcm)
        except NotCumulativeError as exc:
            dcm = None
            conversion = ScreenFailure(ScreenRule.CONVERSION, None, None, str(exc))
            report = ScreenReport(failures=(conversion,)).merge(check_basic(cdcm, require_strong=require_strong))
            logger.debug("Screen rejected a non-cumulative candidate", extra={"n": matrix.n})
            return report

    report = check_basic(cdcm, require_strong=require_strong)
    if report.passed:
        report = report.merge(check_predecessor_bounds(cdcm, cfg, orientation))
        if orientation is Orientation.UNDIRECTED and dcm is not None:
            report = report.merge(check_columns_graphical(dcm, orientation))
    logger.debug(
        "Screen finished",
        extra={"n": matrix.n, "kind": kind.value, "verdict": report.verdict.value, "failures": len(report.failures)},
    )
    return report


__all__ = [
    "PredecessorBoundConfig",
    "ScreenFailure",
    "ScreenReport",
    "check_basic",
    "check_columns_graphical",
    "check_predecessor_bounds",
    "screen",
]
