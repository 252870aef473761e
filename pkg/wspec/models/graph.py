"""
graph.py
--------

Immutable simple undirected graphs on dense 0-based vertex indices.

A Graph stores its vertex count, a frozenset of normalized edges (u, v) with
u < v, and per-vertex sorted neighbour tuples kept consistent with the edge
set. Edits (add_edge, remove_edge, relabel, delete_vertex) return new graphs,
so a transformed graph can always be compared against its original.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from wspec.exceptions import (
    DuplicateEdgeError,
    InvalidParameterError,
    MissingEdgeError,
    SelfLoopError,
    VertexRangeError,
)


def _normalize(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """
    Simple undirected graph.

    Attributes:
        n (int): Vertex count; vertices are 0..n-1.
        edges (frozenset): Normalized edges (u, v), u < v.
        adjacency (tuple): adjacency[v] is the sorted tuple of neighbours of v.
    """

    n: int
    edges: frozenset = field(default_factory=frozenset)
    adjacency: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        if self.n < 1:
            raise InvalidParameterError(
                f"a graph needs at least one vertex, got n={self.n}"
            )
        if not self.adjacency or len(self.adjacency) != self.n:
            neighbours = [[] for _ in range(self.n)]
            for u, v in self.edges:
                neighbours[u].append(v)
                neighbours[v].append(u)
            object.__setattr__(
                self, "adjacency", tuple(tuple(sorted(a)) for a in neighbours)
            )

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """
        Build a graph from an edge iterable, validating every edge.

        Raises:
            VertexRangeError, SelfLoopError, DuplicateEdgeError
        """
        graph = cls(n)
        normalized = set()
        for u, v in edges:
            graph._check_vertex(u)
            graph._check_vertex(v)
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            edge = _normalize(u, v)
            if edge in normalized:
                raise DuplicateEdgeError(f"duplicate edge {edge}")
            normalized.add(edge)
        return cls(n, frozenset(normalized))

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise VertexRangeError(
                f"vertex {v} out of range for graph of order {self.n}"
            )

    # Queries

    @property
    def size(self) -> int:
        """Number of edges."""
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize(u, v) in self.edges

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        """Degree d_v; raises VertexRangeError for an invalid index."""
        self._check_vertex(v)
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def degree_sequence(self) -> tuple[int, ...]:
        """Degrees sorted in non-increasing order."""
        return tuple(sorted(self.degrees(), reverse=True))

    def max_degree(self) -> int:
        return max(self.degrees())

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists, ordered by least vertex."""
        seen = [False] * self.n
        result = []
        for start in range(self.n):
            if seen[start]:
                continue
            seen[start] = True
            queue = deque([start])
            component = []
            while queue:
                u = queue.popleft()
                component.append(u)
                for w in self.adjacency[u]:
                    if not seen[w]:
                        seen[w] = True
                        queue.append(w)
            result.append(sorted(component))
        return result

    def is_connected(self) -> bool:
        """True iff the graph has one component; a single vertex is connected."""
        return len(self.components()) == 1

    def is_tree(self) -> bool:
        return self.size == self.n - 1 and self.is_connected()

    # Edits (each returns a new graph)

    def add_edge(self, u: int, v: int) -> "Graph":
        """
        Return a copy with edge uv added.

        Raises:
            VertexRangeError: u or v outside 0..n-1.
            SelfLoopError: u == v.
            DuplicateEdgeError: edge already present.
        """
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        edge = _normalize(u, v)
        if edge in self.edges:
            raise DuplicateEdgeError(f"edge {edge} already present")
        return Graph(self.n, self.edges | {edge})

    def remove_edge(self, u: int, v: int) -> "Graph":
        """Return a copy without edge uv; raises MissingEdgeError if absent."""
        self._check_vertex(u)
        self._check_vertex(v)
        edge = _normalize(u, v)
        if edge not in self.edges:
            raise MissingEdgeError(f"edge {edge} not present")
        return Graph(self.n, self.edges - {edge})

    def relabel(self, permutation: Sequence[int]) -> "Graph":
        """
        Apply a vertex permutation: vertex v becomes permutation[v].

        Raises:
            InvalidParameterError: permutation is not a permutation of 0..n-1.
        """
        if sorted(permutation) != list(range(self.n)):
            raise InvalidParameterError(
                "relabeling must be a permutation of 0..n-1"
            )
        return Graph(
            self.n,
            frozenset(
                _normalize(permutation[u], permutation[v])
                for u, v in self.edges
            ),
        )

    def delete_vertex(self, v: int) -> "Graph":
        """Return G - v with vertices above v shifted down by one."""
        self._check_vertex(v)
        if self.n == 1:
            raise InvalidParameterError("cannot delete the only vertex")

        def shift(w):
            return w - 1 if w > v else w

        return Graph(
            self.n - 1,
            frozenset(
                (shift(a), shift(b)) for a, b in self.edges if v not in (a, b)
            ),
        )

    def __str__(self):
        return f"Graph(n={self.n}, m={self.size})"


def new_graph(n: int) -> Graph:
    """
    Create the edgeless graph on n vertices.

    Raises:
        InvalidParameterError: n < 1.
    """
    return Graph(n)
