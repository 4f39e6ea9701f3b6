"""Graph representation, distances to a node, neighbourhoods and power graphs.

All distances are measured *towards* a node: ``distances_to(g, i)`` holds
``d(y, i)`` for every ``y``, so breadth-first search walks predecessor lists.
For undirected graphs this coincides with distances from ``i``.

Contents:
    * :class:`Graph` - immutable loop-free graph with cached predecessor lists.
    * :class:`DistanceRow` - distances from every node to one target.
    * :func:`distances_to`, :func:`eccentricity`, :func:`diameter`.
    * :func:`is_strongly_connected`, :func:`connected_components`.
    * :func:`neighborhood_set`, :func:`graph_power`, :func:`relabel`.
    * :func:`random_graph`, :func:`all_graphs` - generators for tests and the CLI.
"""

from __future__ import annotations

import itertools
import math
from collections import deque
from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Final

from .enums import Orientation
from .errors import GraphError, NodeOutOfRangeError, OrientationError

if TYPE_CHECKING:
    from collections.abc import Iterable, Iterator, Sequence

    import numpy as np

#: Distance of a node that cannot reach the target. Compares greater than any int.
INFINITY: Final[float] = math.inf

Arc = tuple[int, int]
Distance = int | float


def _check_node(n: int, node: int) -> None:
    if not 0 <= node < n:
        raise NodeOutOfRangeError(f"node {node} outside [0, {n})")


@dataclass(frozen=True, slots=True)
class Graph:
    """Loop-free graph on nodes ``0..n-1``.

    Undirected graphs store each edge as two symmetric arcs so one BFS serves
    both orientations.

    Attributes:
        n: Number of nodes.
        arcs: Set of ``(tail, head)`` pairs.
        orientation: Directed or undirected.

    Example:
        >>> g = Graph.directed(3, [(0, 1), (1, 2), (2, 0)])
        >>> g.predecessors(0)
        (2,)
        >>> Graph.undirected(2, [(1, 0)]).arcs == frozenset({(0, 1), (1, 0)})
        True
        >>> Graph.directed(2, [(1, 1)])
        Traceback (most recent call last):
        ...
        dcm_toolkit.domain.errors.GraphError: self-loop at node 1
    """

    n: int
    arcs: frozenset[Arc]
    orientation: Orientation = Orientation.DIRECTED
    in_adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    out_adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if self.n < 1:
            raise GraphError(f"a graph needs at least one node, got n={self.n}")
        preds: list[list[int]] = [[] for _ in range(self.n)]
        succs: list[list[int]] = [[] for _ in range(self.n)]
        for tail, head in self.arcs:
            _check_node(self.n, tail)
            _check_node(self.n, head)
            if tail == head:
                raise GraphError(f"self-loop at node {tail}")
            preds[head].append(tail)
            succs[tail].append(head)
        if self.orientation is Orientation.UNDIRECTED:
            for tail, head in self.arcs:
                if (head, tail) not in self.arcs:
                    raise GraphError(f"undirected graph misses the reverse of arc {tail}->{head}")
        object.__setattr__(self, "in_adjacency", tuple(tuple(sorted(p)) for p in preds))
        object.__setattr__(self, "out_adjacency", tuple(tuple(sorted(s)) for s in succs))

    @classmethod
    def directed(cls, n: int, arcs: Iterable[Arc]) -> Graph:
        """Build a directed graph from ``(tail, head)`` pairs."""
        return cls(n, frozenset((int(t), int(h)) for t, h in arcs), Orientation.DIRECTED)

    @classmethod
    def undirected(cls, n: int, edges: Iterable[Arc]) -> Graph:
        """Build an undirected graph; each edge may be listed once in either order."""
        arcs: set[Arc] = set()
        for u, v in edges:
            arcs.add((int(u), int(v)))
            arcs.add((int(v), int(u)))
        return cls(n, frozenset(arcs), Orientation.UNDIRECTED)

    @classmethod
    def empty(cls, n: int, orientation: Orientation = Orientation.DIRECTED) -> Graph:
        """Graph on ``n`` nodes without arcs."""
        return cls(n, frozenset(), orientation)

    @property
    def is_directed(self) -> bool:
        return self.orientation is Orientation.DIRECTED

    def predecessors(self, node: int) -> tuple[int, ...]:
        """Tails of arcs ending in ``node``, ascending."""
        _check_node(self.n, node)
        return self.in_adjacency[node]

    def successors(self, node: int) -> tuple[int, ...]:
        """Heads of arcs leaving ``node``, ascending."""
        _check_node(self.n, node)
        return self.out_adjacency[node]

    def in_degree(self, node: int) -> int:
        return len(self.predecessors(node))

    def degree_sequence(self) -> tuple[int, ...]:
        """In-degrees sorted nonincreasingly (plain degrees for undirected graphs).

        Example:
            >>> Graph.undirected(3, [(0, 1), (1, 2)]).degree_sequence()
            (2, 1, 1)
        """
        return tuple(sorted((len(p) for p in self.in_adjacency), reverse=True))

    def edges(self) -> list[Arc]:
        """Arcs in ascending order; undirected edges appear once with ``u < v``."""
        if self.is_directed:
            return sorted(self.arcs)
        return sorted((u, v) for u, v in self.arcs if u < v)


@dataclass(frozen=True, slots=True)
class DistanceRow:
    """Distances ``d(y, target)`` for every node ``y``.

    Example:
        >>> row = DistanceRow(target=0, dist=(0, INFINITY, 1))
        >>> row.render()
        '0 inf 1'
        >>> row.finite()
        (0, 1)
    """

    target: int
    dist: tuple[Distance, ...]

    def finite(self) -> tuple[int, ...]:
        """Finite distances in node order."""
        return tuple(int(d) for d in self.dist if d != INFINITY)

    def render(self) -> str:
        return " ".join("inf" if d == INFINITY else str(int(d)) for d in self.dist)


def _bfs_towards(g: Graph, sources: Iterable[int], limit: int | None = None) -> list[Distance]:
    """Multi-source BFS over predecessor lists, optionally cut at depth ``limit``."""
    dist: list[Distance] = [INFINITY] * g.n
    queue: deque[int] = deque()
    for source in sources:
        _check_node(g.n, source)
        if dist[source] == INFINITY:
            dist[source] = 0
            queue.append(source)
    preds = g.in_adjacency
    while queue:
        node = queue.popleft()
        depth = int(dist[node])
        if limit is not None and depth >= limit:
            continue
        for tail in preds[node]:
            if dist[tail] == INFINITY:
                dist[tail] = depth + 1
                queue.append(tail)
    return dist


def distances_to(g: Graph, i: int) -> DistanceRow:
    """Return ``d(y, i)`` for every node ``y``; unreachable nodes get :data:`INFINITY`.

    Args:
        g: Graph to search.
        i: Target node.

    Raises:
        NodeOutOfRangeError: If ``i`` is not a node of ``g``.

    Example:
        >>> cycle = Graph.directed(3, [(0, 1), (1, 2), (2, 0)])
        >>> distances_to(cycle, 0).dist
        (0, 2, 1)
    """
    _check_node(g.n, i)
    return DistanceRow(target=i, dist=tuple(_bfs_towards(g, (i,))))


def eccentricity(g: Graph, i: int) -> int:
    """In-eccentricity of ``i``: the largest finite distance of any node to ``i``.

    Infinite distances are ignored, so a node reached by nobody has eccentricity 0.

    Example:
        >>> path = Graph.undirected(3, [(0, 1), (1, 2)])
        >>> eccentricity(path, 0)
        2
    """
    return max(distances_to(g, i).finite())


def diameter(g: Graph) -> int:
    """Largest in-eccentricity over all nodes.

    Example:
        >>> diameter(Graph.empty(2))
        0
    """
    return max(eccentricity(g, i) for i in range(g.n))


def _reaches_all(n: int, adjacency: tuple[tuple[int, ...], ...]) -> bool:
    seen = [False] * n
    seen[0] = True
    queue: deque[int] = deque([0])
    while queue:
        node = queue.popleft()
        for other in adjacency[node]:
            if not seen[other]:
                seen[other] = True
                queue.append(other)
    return all(seen)


def is_strongly_connected(g: Graph) -> bool:
    """True iff every pairwise distance is finite.

    Example:
        >>> is_strongly_connected(Graph.directed(2, [(0, 1)]))
        False
        >>> is_strongly_connected(Graph.empty(1))
        True
    """
    return _reaches_all(g.n, g.in_adjacency) and _reaches_all(g.n, g.out_adjacency)


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Weakly connected components, each sorted, ordered by smallest member.

    Example:
        >>> connected_components(Graph.undirected(4, [(0, 2)]))
        [(0, 2), (1,), (3,)]
    """
    labels = [-1] * g.n
    components: list[tuple[int, ...]] = []
    for start in range(g.n):
        if labels[start] != -1:
            continue
        labels[start] = len(components)
        members = [start]
        queue: deque[int] = deque([start])
        while queue:
            node = queue.popleft()
            for other in itertools.chain(g.predecessors(node), g.successors(node)):
                if labels[other] == -1:
                    labels[other] = len(components)
                    members.append(other)
                    queue.append(other)
        components.append(tuple(sorted(members)))
    return components


def neighborhood_set(g: Graph, nodes: Iterable[int], p: int) -> frozenset[int]:
    """The p-neighbourhood ``M_p(X)``: nodes at distance at most ``p`` to some node of ``X``.

    Args:
        g: Graph to search.
        nodes: The set ``X``.
        p: Radius, ``p >= 0``.

    Raises:
        NodeOutOfRangeError: If ``X`` holds an id outside the graph.
        ValueError: If ``p`` is negative.

    Example:
        >>> g = Graph.directed(3, [(0, 1), (1, 2)])
        >>> sorted(neighborhood_set(g, {2}, 1))
        [1, 2]
        >>> sorted(neighborhood_set(g, {2}, 0))
        [2]
    """
    if p < 0:
        raise ValueError(f"radius must be non-negative, got {p}")
    dist = _bfs_towards(g, nodes, limit=p)
    return frozenset(y for y, d in enumerate(dist) if d != INFINITY)


def graph_power(g: Graph, k: int) -> Graph:
    """Undirected graph joining ``u`` and ``v`` iff ``d(u, v) == k``.

    ``k == 0`` yields the edgeless graph since self-loops are not allowed.

    Raises:
        OrientationError: If ``g`` is directed.

    Example:
        >>> path = Graph.undirected(3, [(0, 1), (1, 2)])
        >>> graph_power(path, 2).edges()
        [(0, 2)]
    """
    if g.is_directed:
        raise OrientationError("graph_power requires an undirected graph")
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    edges: list[Arc] = []
    for v in range(g.n):
        dist = _bfs_towards(g, (v,), limit=k)
        edges.extend((u, v) for u in range(v) if dist[u] == k)
    return Graph.undirected(g.n, edges)


def relabel(g: Graph, mapping: Sequence[int]) -> Graph:
    """Rename node ``old`` to ``mapping[old]``.

    Raises:
        GraphError: If ``mapping`` is not a permutation of ``0..n-1``.

    Example:
        >>> relabel(Graph.directed(2, [(0, 1)]), [1, 0]).edges()
        [(1, 0)]
    """
    if sorted(mapping) != list(range(g.n)):
        raise GraphError(f"relabelling must be a permutation of 0..{g.n - 1}")
    arcs = frozenset((mapping[t], mapping[h]) for t, h in g.arcs)
    return Graph(g.n, arcs, g.orientation)


def random_graph(n: int, p: float, orientation: Orientation, rng: np.random.Generator) -> Graph:
    """Sample ``G(n, p)``: every possible arc (or edge) is present with probability ``p``.

    Args:
        n: Node count.
        p: Arc probability in ``[0, 1]``.
        orientation: Directed samples ordered pairs, undirected samples pairs ``u < v``.
        rng: Seeded numpy generator; the caller owns reproducibility.

    Example:
        >>> import numpy as np
        >>> g = random_graph(5, 0.5, Orientation.UNDIRECTED, np.random.default_rng(7))
        >>> g == random_graph(5, 0.5, Orientation.UNDIRECTED, np.random.default_rng(7))
        True
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"arc probability must lie in [0, 1], got {p}")
    coins = rng.random((n, n)) < p
    if orientation is Orientation.DIRECTED:
        return Graph.directed(n, ((t, h) for t in range(n) for h in range(n) if t != h and coins[t, h]))
    return Graph.undirected(n, ((u, v) for u in range(n) for v in range(u + 1, n) if coins[u, v]))


def all_graphs(n: int, orientation: Orientation) -> Iterator[Graph]:
    """Every labelled loop-free graph on ``n`` nodes.

    There are ``2 ** (n * (n - 1))`` directed and ``2 ** (n * (n - 1) / 2)``
    undirected graphs, so this is only meant for small ``n``.

    Example:
        >>> sum(1 for _ in all_graphs(3, Orientation.UNDIRECTED))
        8
    """
    if orientation is Orientation.DIRECTED:
        slots = [(t, h) for t in range(n) for h in range(n) if t != h]
    else:
        slots = [(u, v) for u in range(n) for v in range(u + 1, n)]
    build = Graph.directed if orientation is Orientation.DIRECTED else Graph.undirected
    for mask in range(1 << len(slots)):
        yield build(n, (arc for bit, arc in enumerate(slots) if mask >> bit & 1))


__all__ = [
    "INFINITY",
    "Arc",
    "Distance",
    "DistanceRow",
    "Graph",
    "all_graphs",
    "connected_components",
    "diameter",
    "distances_to",
    "eccentricity",
    "graph_power",
    "is_strongly_connected",
    "neighborhood_set",
    "random_graph",
    "relabel",
]
