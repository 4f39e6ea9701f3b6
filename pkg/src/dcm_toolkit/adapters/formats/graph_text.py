"""Graph text format.

Line 1 is ``D <n>`` or ``U <n>``; every further line holds ``<tail> <head>``
with 0-based ids. Undirected edges are listed once in either order. ``#``
starts a comment. Self-loops and repeated arcs are rejected.
"""

from __future__ import annotations

from typing import TYPE_CHECKING

from dcm_toolkit.domain.enums import Orientation
from dcm_toolkit.domain.errors import FormatError, GraphError
from dcm_toolkit.domain.graphs import Arc, Graph

from ._lines import content_lines, parse_ints

if TYPE_CHECKING:
    from collections.abc import Iterable


def _parse_header(content: str, line: int) -> tuple[Orientation, int]:
    parts = content.split()
    if len(parts) != 2:  # noqa: PLR2004
        raise FormatError(f"expected header 'D <n>' or 'U <n>', got {content!r}", line=line)
    try:
        orientation = Orientation.from_header(parts[0])
        n = int(parts[1])
    except ValueError as exc:
        raise FormatError(str(exc), line=line) from None
    if n < 1:
        raise FormatError(f"node count must be positive, got {n}", line=line)
    return orientation, n


def parse_graph(text: str) -> Graph:
    """Parse the graph text format.

    Raises:
        FormatError: On a malformed header, a malformed arc line, a self-loop,
            an id out of range or a repeated arc or edge.

    Example:
        >>> g = parse_graph("U 3\\n0 1\\n2 1\\n")
        >>> g.edges()
        [(0, 1), (1, 2)]
        >>> parse_graph("D 2\\n0 1\\n0 1\\n")
        Traceback (most recent call last):
        ...
        dcm_toolkit.domain.errors.FormatError: line 3: duplicate arc 0 -> 1
    """
    lines = content_lines(text)
    first = next(lines, None)
    if first is None:
        raise FormatError("graph file is empty")
    orientation, n = _parse_header(first[1], first[0])
    arcs: list[Arc] = []
    seen: set[Arc] = set()
    for number, content in lines:
        ends = parse_ints(content, number)
        if len(ends) != 2:  # noqa: PLR2004
            raise FormatError(f"expected two node ids, got {len(ends)}", line=number)
        tail, head = ends
        if tail == head:
            raise FormatError(f"self-loop at node {tail}", line=number)
        if not (0 <= tail < n and 0 <= head < n):
            raise FormatError(f"node id outside [0, {n})", line=number)
        key = (tail, head) if orientation is Orientation.DIRECTED else (min(tail, head), max(tail, head))
        if key in seen:
            kind = "arc" if orientation is Orientation.DIRECTED else "edge"
            arrow = "->" if orientation is Orientation.DIRECTED else "--"
            raise FormatError(f"duplicate {kind} {tail} {arrow} {head}", line=number)
        seen.add(key)
        arcs.append((tail, head))
    try:
        if orientation is Orientation.DIRECTED:
            return Graph.directed(n, arcs)
        return Graph.undirected(n, arcs)
    except GraphError as exc:
        raise FormatError(str(exc)) from exc


def render_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    """Render ``g``; each comment becomes a ``# `` line after the header.

    Example:
        >>> print(render_graph(Graph.directed(2, [(1, 0)]), ["witness"]), end="")
        D 2
        # witness
        1 0
    """
    lines = [f"{g.orientation.header} {g.n}"]
    lines.extend(f"# {comment}" for comment in comments)
    lines.extend(f"{tail} {head}" for tail, head in g.edges())
    return "\n".join(lines) + "\n"


__all__ = ["parse_graph", "render_graph"]
