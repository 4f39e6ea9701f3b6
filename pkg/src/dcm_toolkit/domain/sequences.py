"""Degree-sequence realizability and realization of good sequences as trees.

Contents:
    * :class:`DegreeSequence`, :class:`GoodSequence` - validated value types.
    * :func:`erdos_gallai_check` - graphicality by the prefix inequalities.
    * :func:`havel_hakimi` - constructive graphicality test.
    * :func:`indegree_realize` - directed graph with prescribed in-degrees.
    * :func:`realize_good_sequence` - star-chain tree whose CDCM row 0 is the input.
    * :func:`column_sequence` - a DCM column as a degree sequence.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import SequenceError
from .graphs import Arc, Graph
from .matrices import DcMatrix, goodness

if TYPE_CHECKING:
    from collections.abc import Iterable

logger = logging.getLogger(__name__)


@dataclass(frozen=True, slots=True)
class DegreeSequence:
    """Nonincreasing, non-empty list of naturals ``d_1 >= d_2 >= ... >= d_p``.

    Example:
        >>> DegreeSequence.from_unsorted([1, 3, 2]).values
        (3, 2, 1)
        >>> DegreeSequence((1, 2))
        Traceback (most recent call last):
        ...
        dcm_toolkit.domain.errors.SequenceError: degree sequence must be nonincreasing, got (1, 2)
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(int(v) for v in self.values)
        if not values:
            raise SequenceError("degree sequence must not be empty")
        if any(v < 0 for v in values):
            raise SequenceError(f"degrees must be non-negative, got {values}")
        if any(a < b for a, b in itertools.pairwise(values)):
            raise SequenceError(f"degree sequence must be nonincreasing, got {values}")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_unsorted(cls, values: Iterable[int]) -> DegreeSequence:
        """Sort ``values`` nonincreasingly and wrap them."""
        return cls(tuple(sorted((int(v) for v in values), reverse=True)))

    @property
    def p(self) -> int:
        return len(self.values)


@dataclass(frozen=True, slots=True)
class GoodSequence:
    """Sequence of positive integers that passes :func:`goodness`.

    Example:
        >>> GoodSequence((1, 2, 2)).plateau
        2
        >>> GoodSequence((1, 2, 2, 3))
        Traceback (most recent call last):
        ...
        dcm_toolkit.domain.errors.SequenceError: sequence (1, 2, 2, 3) is not good
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(int(v) for v in self.values)
        if not goodness(values).is_good:
            raise SequenceError(f"sequence {values} is not good")
        object.__setattr__(self, "values", values)

    @property
    def plateau(self) -> int:
        return self.values[-1]


@dataclass(frozen=True, slots=True)
class HavelHakimiResult:
    """Outcome of :func:`havel_hakimi`.

    Attributes:
        graph: The realization on success, else None.
        failed_step: Reduction step (1-based) at which an entry would go
            negative; 0 for rejections found before reducing.
        reason: Human-readable explanation of a rejection.
    """

    graph: Graph | None
    failed_step: int | None = None
    reason: str = ""

    @property
    def accepted(self) -> bool:
        return self.graph is not None


def erdos_gallai_check(d: DegreeSequence) -> bool:
    """Graphicality test: even sum and the prefix inequality for every ``k = 1..p``.

    Example:
        >>> erdos_gallai_check(DegreeSequence((2, 2, 2)))
        True
        >>> erdos_gallai_check(DegreeSequence((3, 1, 1)))
        False
        >>> erdos_gallai_check(DegreeSequence((2,)))
        False
    """
    values = d.values
    if sum(values) % 2:
        return False
    prefix = 0
    for k in range(1, d.p + 1):
        prefix += values[k - 1]
        tail = sum(min(v, k) for v in values[k:])
        if prefix > k * (k - 1) + tail:
            return False
    return True


def havel_hakimi(d: DegreeSequence) -> HavelHakimiResult:
    """Constructive graphicality test.

    Node ``i`` is assigned degree ``d.values[i]``. Each step removes the node
    with the largest residual degree and joins it to the next-largest ones,
    ties broken by the smallest node id.

    Example:
        >>> havel_hakimi(DegreeSequence((2, 2, 2))).graph.edges()
        [(0, 1), (0, 2), (1, 2)]
        >>> result = havel_hakimi(DegreeSequence((1, 1, 1)))
        >>> result.accepted, result.failed_step, result.reason
        (False, 0, 'odd degree sum')
    """
    p = d.p
    if d.values[0] > p - 1:
        return HavelHakimiResult(None, 0, f"degree {d.values[0]} exceeds p - 1 = {p - 1}")
    if sum(d.values) % 2:
        return HavelHakimiResult(None, 0, "odd degree sum")
    residual = list(d.values)
    active = set(range(p))
    edges: list[Arc] = []
    step = 0
    while active:
        node = min(active, key=lambda v: (-residual[v], v))
        if residual[node] == 0:
            break
        step += 1
        active.discard(node)
        chosen = sorted(active, key=lambda v: (-residual[v], v))[: residual[node]]
        if len(chosen) < residual[node] or any(residual[v] == 0 for v in chosen):
            logger.debug("Havel-Hakimi rejected", extra={"step": step, "node": node})
            return HavelHakimiResult(None, step, f"node {node} cannot be joined to {residual[node]} nodes")
        for v in chosen:
            residual[v] -= 1
            edges.append((min(node, v), max(node, v)))
        residual[node] = 0
    return HavelHakimiResult(Graph.undirected(p, edges))


def indegree_realize(d: DegreeSequence) -> Graph:
    """Directed graph where node ``i`` has in-degree ``d.values[i]``.

    Tails of node ``i`` are the ``d_i`` smallest ids other than ``i``.

    Raises:
        SequenceError: If some ``d_i >= p`` (would need a self-loop).

    Example:
        >>> indegree_realize(DegreeSequence((1, 1))).edges()
        [(0, 1), (1, 0)]
    """
    p = d.p
    if d.values[0] >= p:
        raise SequenceError(f"in-degree {d.values[0]} needs a self-loop on {p} nodes")
    arcs: list[Arc] = []
    for head, degree in enumerate(d.values):
        tails = [t for t in range(p) if t != head][:degree]
        arcs.extend((t, head) for t in tails)
    return Graph.directed(p, arcs)


def realize_good_sequence(a: GoodSequence) -> Graph:
    """Undirected tree (plus isolated nodes) whose CDCM row 0 equals ``a``.

    Root 0 carries a star of ``b_1`` leaves, the lowest-id leaf carries the
    next star of ``b_2`` leaves, and so on, with ``b_i = a_i - a_{i-1}``. Nodes
    ``k..n-1`` stay isolated when the plateau ``k`` is below ``n``.

    Example:
        >>> realize_good_sequence(GoodSequence((1, 3, 6, 8, 8, 8, 8, 8))).edges()
        [(0, 1), (0, 2), (1, 3), (1, 4), (1, 5), (3, 6), (3, 7)]
    """
    values = a.values
    edges: list[Arc] = []
    carrier = 0
    next_id = 1
    for previous, current in itertools.pairwise(values):
        width = current - previous
        if width == 0:
            break
        leaves = range(next_id, next_id + width)
        edges.extend((carrier, leaf) for leaf in leaves)
        carrier = leaves[0]
        next_id += width
    return Graph.undirected(len(values), edges)


def column_sequence(matrix: DcMatrix, k: int) -> DegreeSequence:
    """Column ``k`` of a DCM sorted nonincreasingly."""
    return DegreeSequence.from_unsorted(int(x) for x in matrix.entries[:, k])


def in_degree_sequence(matrix: DcMatrix) -> DegreeSequence:
    """In-degrees encoded by column 1, sorted nonincreasingly.

    Example:
        >>> in_degree_sequence(DcMatrix.from_rows([[1, 1, 0], [1, 2, 0], [1, 0, 0]])).values
        (2, 1, 0)
    """
    if matrix.n == 1:
        return DegreeSequence((0,))
    return column_sequence(matrix, 1)


__all__ = [
    "DegreeSequence",
    "GoodSequence",
    "HavelHakimiResult",
    "column_sequence",
    "erdos_gallai_check",
    "havel_hakimi",
    "in_degree_sequence",
    "indegree_realize",
    "realize_good_sequence",
]
