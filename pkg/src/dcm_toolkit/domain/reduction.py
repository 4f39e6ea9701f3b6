"""Three-partition instances, their exact solver and the DCM reduction gadget.

An instance is a nonincreasing list ``a`` of ``3m`` positive integers with sum
``s`` and target ``t = s / m``. It is positive when the indices split into
``m`` disjoint triples that each sum to ``t``.

The gadget matrix ``M(a)`` is an ``n x n`` DCM candidate with ``n = 4m + s``:

* ``3m`` x-rows ``[1, a_i, 1, t - a_i, 2, 0, ...]``
* ``s`` y-rows ``[1, 2, t - 1, 2, 0, ...]``
* ``m`` z-rows ``[1, t, 3, 0, ...]``

For a positive instance the gadget graph built from a solution realizes it:
triple ``j`` owns ``t`` y-nodes joined to ``z_j``, and each of its three
x-nodes is joined to its own block of ``a_i`` of them.
"""

from __future__ import annotations

import itertools
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import TYPE_CHECKING, Final, Literal

import numpy as np

from .enums import TppStatus, ValidationLevel
from .errors import InstanceError, InvalidSolutionError
from .graphs import Arc, Graph
from .matrices import DcMatrix

if TYPE_CHECKING:
    from collections.abc import Iterable, Sequence

logger = logging.getLogger(__name__)

_INT64_MAX: Final[int] = int(np.iinfo(np.int64).max)
#: Largest ``3m`` the exact solver accepts by default.
DEFAULT_MAX_ITEMS: Final[int] = 24
#: Default minimum gap and minimum entry for the hardened validation level.
DEFAULT_GAP: Final[int] = 3
_MIN_HARDENED_T: Final[int] = 4
#: Largest gadget dimension ``4m + s`` that is materialised as a dense matrix.
MAX_GADGET_NODES: Final[int] = 5_000

Triple = tuple[int, int, int]


@dataclass(frozen=True, slots=True)
class TppInstance:
    """Validated three-partition instance.

    Attributes:
        values: Entries ``a_1 >= ... >= a_3m``, all positive.

    Example:
        >>> inst = TppInstance.from_values([1, 9, 5, 7, 2, 6])
        >>> inst.values, inst.m, inst.s, inst.t
        ((9, 7, 6, 5, 2, 1), 2, 30, Fraction(15, 1))
        >>> TppInstance((1, 2, 3))
        Traceback (most recent call last):
        ...
        dcm_toolkit.domain.errors.InstanceError: instance must be nonincreasing, got (1, 2, 3)
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(int(v) for v in self.values)
        if not values or len(values) % 3:
            raise InstanceError(f"instance needs 3m > 0 entries, got {len(values)}")
        if any(v <= 0 for v in values):
            raise InstanceError(f"instance entries must be positive, got {values}")
        if any(x < y for x, y in itertools.pairwise(values)):
            raise InstanceError(f"instance must be nonincreasing, got {values}")
        object.__setattr__(self, "values", values)

    @classmethod
    def from_values(cls, values: Iterable[int]) -> TppInstance:
        """Sort ``values`` nonincreasingly and wrap them."""
        return cls(tuple(sorted((int(v) for v in values), reverse=True)))

    @property
    def m(self) -> int:
        return len(self.values) // 3

    @property
    def s(self) -> int:
        return sum(self.values)

    @property
    def t(self) -> Fraction:
        return Fraction(self.s, self.m)

    @property
    def has_integer_target(self) -> bool:
        return self.t.denominator == 1

    def target(self) -> int:
        """Return ``t`` as an integer.

        Raises:
            InstanceError: If ``m`` does not divide ``s``.
        """
        if not self.has_integer_target:
            raise InstanceError(f"target t = {self.s}/{self.m} is not an integer")
        return int(self.t)


@dataclass(frozen=True, slots=True)
class InstanceVerdict:
    """Result of :func:`validate_instance`; ``rule`` names the first violation."""

    level: ValidationLevel
    rule: str | None = None
    detail: str = ""

    @property
    def valid(self) -> bool:
        return self.rule is None


def _lenient_violation(values: Sequence[int]) -> tuple[str, str] | None:
    if not values:
        return "nonempty", "instance is empty"
    if any(v <= 0 for v in values):
        return "positive", "entries must be positive"
    if any(x < y for x, y in itertools.pairwise(values)):
        return "nonincreasing", "entries must be nonincreasing"
    if len(values) % 3:
        return "length", f"length {len(values)} is not a multiple of 3"
    m = len(values) // 3
    if sum(values) % m:
        return "integer-t", f"t = {sum(values)}/{m} is not an integer"
    return None


def _tpp_violation(values: Sequence[int]) -> tuple[str, str] | None:
    t = Fraction(sum(values), len(values) // 3)
    for i, v in enumerate(values):
        if not v < t / 2:
            return "upper-bound", f"a_{i + 1} = {v} is not below t/2 = {float(t / 2):g}"
        if not v > t / 4:
            return "lower-bound", f"a_{i + 1} = {v} is not above t/4 = {float(t / 4):g}"
    return None


def _hardened_violation(values: Sequence[int], gap: int) -> tuple[str, str] | None:
    if len(set(values)) != len(values):
        return "distinct", "entries must be pairwise distinct"
    t = sum(values) // (len(values) // 3)
    if t < _MIN_HARDENED_T:
        return "t-min", f"t = {t} is below {_MIN_HARDENED_T}"
    if values[-1] < gap:
        return "smallest", f"smallest entry {values[-1]} is below {gap}"
    for i, (x, y) in enumerate(itertools.pairwise(values)):
        if x - y < gap:
            return "gap", f"a_{i + 1} - a_{i + 2} = {x - y} is below {gap}"
    return None


def validate_instance(
    values: Sequence[int], level: ValidationLevel, gap: int = DEFAULT_GAP
) -> InstanceVerdict:
    """Check ``values`` against the rules of ``level`` and the levels below it.

    ``lenient`` needs positive nonincreasing entries, a length divisible by 3
    and an integer ``t``. ``tpp`` adds ``t/4 < a_i < t/2``. ``hardened`` adds
    distinct entries, ``t >= 4``, ``a_3m >= gap`` and consecutive gaps ``>= gap``.

    Example:
        >>> validate_instance([9, 7, 6, 5, 2, 1], ValidationLevel.LENIENT).valid
        True
        >>> validate_instance([9, 7, 6, 5, 2, 1], ValidationLevel.TPP).rule
        'upper-bound'
    """
    if gap < 1:
        raise InstanceError(f"gap must be >= 1, got {gap}")
    values = [int(v) for v in values]
    checks = [_lenient_violation]
    if level in (ValidationLevel.TPP, ValidationLevel.HARDENED):
        checks.append(_tpp_violation)
    for check in checks:
        violation = check(values)
        if violation:
            return InstanceVerdict(level, *violation)
    if level is ValidationLevel.HARDENED:
        violation = _hardened_violation(values, gap)
        if violation:
            return InstanceVerdict(level, *violation)
    return InstanceVerdict(level)


def _checked(values: Iterable[int], what: str) -> TppInstance:
    result = tuple(values)
    if sum(result) > _INT64_MAX:
        raise InstanceError(f"{what} overflows the 64-bit range")
    return TppInstance(result)


def scale(instance: TppInstance, k: int) -> TppInstance:
    """Multiply every entry by ``k``; ``t`` scales with it and positivity is kept.

    Example:
        >>> scale(TppInstance((9, 7, 6, 5, 2, 1)), 3).values
        (27, 21, 18, 15, 6, 3)
    """
    if k < 1:
        raise InstanceError(f"scale factor must be >= 1, got {k}")
    return _checked((v * k for v in instance.values), f"scaling by {k}")


def shift(instance: TppInstance, c: int) -> TppInstance:
    """Add ``c`` to every entry; ``t`` grows by ``3c`` and positivity is kept.

    Example:
        >>> shifted = shift(TppInstance((3, 2, 1)), 2)
        >>> shifted.values, shifted.t
        ((5, 4, 3), Fraction(12, 1))
    """
    if c < 0:
        raise InstanceError(f"shift must be >= 0, got {c}")
    return _checked((v + c for v in instance.values), f"shifting by {c}")


@dataclass(frozen=True, slots=True)
class TppSolution:
    """Partition of the index set into triples, each sorted ascending.

    Example:
        >>> TppSolution.of([(5, 0, 3), (4, 2, 1)]).triples
        ((0, 3, 5), (1, 2, 4))
    """

    triples: tuple[Triple, ...]

    @classmethod
    def of(cls, triples: Iterable[Iterable[int]]) -> TppSolution:
        normalised: list[Triple] = []
        for triple in triples:
            items = sorted(int(i) for i in triple)
            if len(items) != 3:  # noqa: PLR2004
                raise InvalidSolutionError(f"group {items} does not have three members")
            normalised.append((items[0], items[1], items[2]))
        return cls(tuple(sorted(normalised)))

    def check(self, instance: TppInstance) -> None:
        """Raise :class:`InvalidSolutionError` unless this solves ``instance``."""
        t = instance.target()
        if len(self.triples) != instance.m:
            raise InvalidSolutionError(f"expected {instance.m} triples, got {len(self.triples)}")
        seen = sorted(i for triple in self.triples for i in triple)
        if seen != list(range(len(instance.values))):
            raise InvalidSolutionError("triples must partition the indices 0..3m-1")
        for triple in self.triples:
            total = sum(instance.values[i] for i in triple)
            if total != t:
                raise InvalidSolutionError(f"triple {triple} sums to {total}, expected {t}")


@dataclass(frozen=True, slots=True)
class TppOutcome:
    """Solver answer; ``solution`` is set exactly when the status is positive."""

    status: TppStatus
    solution: TppSolution | None = None
    explored: int = 0
    reason: str = ""


class _BudgetExhaustedError(Exception):
    pass


class _ExactCover:
    """Exact cover of the index set by sum-``t`` triples.

    Branches on the uncovered index with the fewest usable triples.
    """

    def __init__(self, size: int, triples: list[Triple], node_budget: int | None) -> None:
        self.universe = frozenset(range(size))
        self.membership: dict[int, list[Triple]] = defaultdict(list)
        for triple in triples:
            for i in triple:
                self.membership[i].append(triple)
        self.node_budget = node_budget
        self.explored = 0

    def _usable(self, index: int, covered: frozenset[int]) -> list[Triple]:
        return [tr for tr in self.membership[index] if covered.isdisjoint(tr)]

    def _solve(self, covered: frozenset[int], selected: list[Triple]) -> list[Triple] | None:
        self.explored += 1
        if self.node_budget is not None and self.explored > self.node_budget:
            raise _BudgetExhaustedError
        if covered == self.universe:
            return selected
        index = min(self.universe - covered, key=lambda i: (len(self._usable(i, covered)), i))
        for triple in self._usable(index, covered):
            found = self._solve(covered | frozenset(triple), [*selected, triple])
            if found is not None:
                return found
        return None

    def solve(self) -> list[Triple] | None:
        return self._solve(frozenset(), [])


def solve_tpp(
    instance: TppInstance, max_items: int = DEFAULT_MAX_ITEMS, node_budget: int | None = None
) -> TppOutcome:
    """Decide ``instance`` exactly.

    Sum-``t`` triples are enumerated (largest element first) and an exact
    cover of the indices is searched. More than ``max_items`` entries or an
    exhausted ``node_budget`` give ``unknown``; a non-integer ``t`` is negative.

    Example:
        >>> solve_tpp(TppInstance((9, 7, 6, 5, 2, 1))).solution
        TppSolution(triples=((0, 3, 5), (1, 2, 4)))
        >>> solve_tpp(TppInstance((5, 5, 5, 1, 1, 1))).status
        <TppStatus.NEGATIVE: 'negative'>
    """
    values = instance.values
    if len(values) > max_items:
        return TppOutcome(TppStatus.UNKNOWN, reason=f"3m = {len(values)} exceeds the limit of {max_items}")
    if not instance.has_integer_target:
        return TppOutcome(TppStatus.NEGATIVE, reason="t is not an integer")
    t = instance.target()
    triples = [
        (i, j, k) for i, j, k in itertools.combinations(range(len(values)), 3) if values[i] + values[j] + values[k] == t
    ]
    search = _ExactCover(len(values), triples, node_budget)
    try:
        found = search.solve()
    except _BudgetExhaustedError:
        logger.info("Three-partition search ran out of budget", extra={"explored": search.explored})
        return TppOutcome(TppStatus.UNKNOWN, explored=search.explored, reason="node budget exhausted")
    logger.debug(
        "Three-partition search finished",
        extra={"items": len(values), "triples": len(triples), "explored": search.explored, "found": found is not None},
    )
    if found is None:
        return TppOutcome(TppStatus.NEGATIVE, explored=search.explored)
    return TppOutcome(TppStatus.POSITIVE, TppSolution.of(found), explored=search.explored)


def _gadget_target(instance: TppInstance) -> int:
    t = instance.target()
    if t < instance.values[0] + 1:
        raise InstanceError(f"t = {t} must exceed the largest entry {instance.values[0]}")
    return t


def build_matrix(instance: TppInstance) -> DcMatrix:
    """The gadget matrix ``M(a)``; every row sums to ``t + 4``.

    Raises:
        InstanceError: If ``t`` is not an integer, ``t <= a_1`` or ``4m + s``
            exceeds :data:`MAX_GADGET_NODES`.

    Example:
        >>> matrix = build_matrix(TppInstance((2, 1, 1)))
        >>> matrix.n, matrix.row(0)[:5], matrix.row(7)[:5]
        (8, (1, 2, 1, 2, 2), (1, 4, 3, 0, 0))
    """
    t = _gadget_target(instance)
    if not validate_instance(instance.values, ValidationLevel.HARDENED).valid:
        logger.debug("Building the gadget matrix outside the hardened regime", extra={"values": instance.values})
    m, s = instance.m, instance.s
    n = 4 * m + s
    if n > MAX_GADGET_NODES:
        raise InstanceError(f"gadget would have 4m + s = {n} nodes, more than {MAX_GADGET_NODES}")
    entries = np.zeros((n, n), dtype=np.int64)
    for i, a_i in enumerate(instance.values):
        entries[i, :5] = (1, a_i, 1, t - a_i, 2)
    entries[3 * m : 3 * m + s, :4] = (1, 2, t - 1, 2)
    entries[3 * m + s :, :3] = (1, t, 3)
    return DcMatrix(entries)


@dataclass(frozen=True, slots=True)
class NodeRole:
    """Role of one gadget node.

    ``x`` nodes carry the entry index, ``y`` nodes their position ``u`` inside
    triple ``j``'s block, and ``z`` nodes the triple.
    """

    group: Literal["x", "y", "z"]
    index: int
    triple: int | None = None

    @property
    def label(self) -> str:
        if self.group == "y":
            return f"y_{self.index}^{self.triple}"
        return f"{self.group}_{self.index}"


@dataclass(frozen=True, slots=True)
class GadgetLayout:
    """Roles of all ``n = 4m + s`` gadget nodes, indexed by node id.

    Example:
        >>> layout = layout_of(TppInstance((2, 1, 1)))
        >>> [role.label for role in layout.roles]
        ['x_0', 'x_1', 'x_2', 'y_0^0', 'y_1^0', 'y_2^0', 'y_3^0', 'z_0']
    """

    roles: tuple[NodeRole, ...]
    m: int = 0
    t: int = 0

    @property
    def n(self) -> int:
        return len(self.roles)

    def nodes(self, group: Literal["x", "y", "z"]) -> tuple[int, ...]:
        return tuple(node for node, role in enumerate(self.roles) if role.group == group)

    def y_node(self, triple: int, u: int) -> int:
        return 3 * self.m + triple * self.t + u

    def z_node(self, triple: int) -> int:
        return 3 * self.m + self.m * self.t + triple


def layout_of(instance: TppInstance) -> GadgetLayout:
    """Node roles: x-nodes in entry order, then y-nodes grouped by triple, then z-nodes."""
    m, t = instance.m, instance.target()
    roles = [NodeRole("x", i) for i in range(3 * m)]
    roles.extend(NodeRole("y", u, j) for j in range(m) for u in range(t))
    roles.extend(NodeRole("z", j) for j in range(m))
    return GadgetLayout(tuple(roles), m=m, t=t)


def build_gadget(instance: TppInstance, solution: TppSolution) -> tuple[Graph, GadgetLayout]:
    """Undirected graph whose DCM is ``M(a)`` up to row order.

    Inside triple ``j`` the three x-nodes take consecutive y-blocks in
    ascending index order.

    Raises:
        InvalidSolutionError: If ``solution`` does not solve ``instance``.

    Example:
        >>> graph, layout = build_gadget(TppInstance((2, 1, 1)), TppSolution.of([(0, 1, 2)]))
        >>> graph.edges()
        [(0, 3), (0, 4), (1, 5), (2, 6), (3, 7), (4, 7), (5, 7), (6, 7)]
    """
    solution.check(instance)
    layout = layout_of(instance)
    edges: list[Arc] = []
    for j, triple in enumerate(solution.triples):
        z = layout.z_node(j)
        edges.extend((layout.y_node(j, u), z) for u in range(layout.t))
        offset = 0
        for i in triple:
            width = instance.values[i]
            edges.extend((i, layout.y_node(j, u)) for u in range(offset, offset + width))
            offset += width
    return Graph.undirected(layout.n, edges), layout


__all__ = [
    "DEFAULT_GAP",
    "DEFAULT_MAX_ITEMS",
    "MAX_GADGET_NODES",
    "GadgetLayout",
    "InstanceVerdict",
    "NodeRole",
    "TppInstance",
    "TppOutcome",
    "TppSolution",
    "build_gadget",
    "build_matrix",
    "layout_of",
    "scale",
    "shift",
    "solve_tpp",
    "validate_instance",
]
