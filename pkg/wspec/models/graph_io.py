"""
graph_io.py
-----------

Graph text format used for fixtures and `wspec trees --emit`.

    n m
    u v        (m lines, 0-based, u < v)

UTF-8, LF line endings. Several graphs in one stream are separated by a
blank line.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from wspec.exceptions import GraphError
from wspec.models.graph import Graph


def write_graph(g: Graph) -> str:
    """Serialize a graph; edges are listed in sorted order."""
    lines = [f"{g.n} {g.size}"]
    lines += [f"{u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(lines) + "\n"


def write_graphs(graphs: Iterable[Graph]) -> Iterator[str]:
    """Yield serialized graphs separated by blank lines."""
    for index, g in enumerate(graphs):
        yield ("\n" if index else "") + write_graph(g)


def _parse_ints(line: str, expected: int, lineno: int) -> list[int]:
    parts = line.split()
    if len(parts) != expected:
        raise GraphError(
            f"line {lineno}: expected {expected} integers, got {line!r}"
        )
    try:
        return [int(p) for p in parts]
    except ValueError as exc:
        raise GraphError(f"line {lineno}: non-integer value in {line!r}") from exc


def read_graph(text: str) -> Graph:
    """
    Parse one graph in the text format.

    Raises:
        GraphError: malformed header, wrong edge count, u >= v, or any
        structural error raised by Graph.from_edges.
    """
    lines = [ln for ln in text.replace("\r\n", "\n").split("\n") if ln.strip()]
    if not lines:
        raise GraphError("empty graph text")
    n, m = _parse_ints(lines[0], 2, 1)
    if n < 1:
        raise GraphError(f"line 1: a graph needs at least one vertex, got n={n}")
    if len(lines) - 1 != m:
        raise GraphError(f"header announces {m} edges, found {len(lines) - 1}")
    edges = []
    for lineno, line in enumerate(lines[1:], start=2):
        u, v = _parse_ints(line, 2, lineno)
        if u >= v:
            raise GraphError(f"line {lineno}: expected u < v, got {u} {v}")
        edges.append((u, v))
    return Graph.from_edges(n, edges)


def read_graphs(text: str) -> list[Graph]:
    """Parse a blank-line separated stream of graphs."""
    blocks, current = [], []
    for line in text.replace("\r\n", "\n").split("\n"):
        if line.strip():
            current.append(line)
        elif current:
            blocks.append("\n".join(current))
            current = []
    if current:
        blocks.append("\n".join(current))
    return [read_graph(block) for block in blocks]
