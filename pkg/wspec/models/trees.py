"""
trees.py
--------

Named tree constructors and human-readable tree labels.

Vertex layouts (used by tests and transforms):
    - path(n): 0-1-...-(n-1).
    - star(n): centre 0, leaves 1..n-1.
    - double_star(d, n): centres 0 (degree d) and 1 (degree n-d); leaves
      2..d hang on 0, leaves d+1..n-1 hang on 1.
    - caterpillar(spine_len, leaf_counts): spine 0..spine_len-1, then the
      leaves of spine vertex 0, of spine vertex 1, ...
    - spider_t1(): centre 0, middles 1,2,3, leaves 4,5,6 (leaf 3+i on middle i).
"""

from __future__ import annotations

from typing import Sequence

from wspec.exceptions import InvalidParameterError
from wspec.models.canonical import tree_canonical_form
from wspec.models.graph import Graph

T1_CENTER = (0,)
T1_MIDDLES = (1, 2, 3)
T1_LEAVES = (4, 5, 6)


def path(n: int) -> Graph:
    """Path P_n on n >= 1 vertices."""
    if n < 1:
        raise InvalidParameterError(f"path needs n >= 1, got {n}")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(n: int) -> Graph:
    """Star S_n on n >= 2 vertices, centre 0."""
    if n < 2:
        raise InvalidParameterError(f"star needs n >= 2, got {n}")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)))


def double_star(d: int, n: int) -> Graph:
    """
    Double star S_{d,n-d}: adjacent centres of degrees d and n-d.

    Any 2 <= d <= n-2 is accepted and canonicalized so that the centre at
    vertex 0 has the smaller degree.
    """
    if n < 4 or not 2 <= d <= n - 2:
        raise InvalidParameterError(
            f"double star needs n >= 4 and 2 <= d <= n-2, got d={d}, n={n}"
        )
    d = min(d, n - d)
    edges = [(0, 1)]
    edges += [(0, leaf) for leaf in range(2, d + 1)]
    edges += [(1, leaf) for leaf in range(d + 1, n)]
    return Graph.from_edges(n, edges)


def caterpillar(spine_len: int, leaf_counts: Sequence[int]) -> Graph:
    """
    Caterpillar with a spine path and leaf_counts[i] leaves on spine vertex i.
    """
    if spine_len < 1:
        raise InvalidParameterError(
            f"caterpillar needs spine_len >= 1, got {spine_len}"
        )
    if len(leaf_counts) != spine_len or any(c < 0 for c in leaf_counts):
        raise InvalidParameterError(
            "leaf_counts must hold one nonnegative count per spine vertex"
        )
    n = spine_len + sum(leaf_counts)
    edges = [(i, i + 1) for i in range(spine_len - 1)]
    nxt = spine_len
    for spine_vertex, count in enumerate(leaf_counts):
        for _ in range(count):
            edges.append((spine_vertex, nxt))
            nxt += 1
    return Graph.from_edges(n, edges)


def spider_t1() -> Graph:
    """The 7-vertex spider with three legs of length two."""
    edges = [(0, m) for m in T1_MIDDLES]
    edges += [(m, leaf) for m, leaf in zip(T1_MIDDLES, T1_LEAVES)]
    return Graph.from_edges(7, edges)


def describe_tree(g: Graph) -> str:
    """
    Label a tree for reports.

    Returns "P_n", "S_n", "S_{d,n-d}" (d <= n-d) when the tree is a path,
    star or double star, else "tree[<canonical form>]".
    """
    n = g.n
    degrees = g.degrees()
    if n <= 3 or max(degrees) <= 2:
        return f"P_{n}"
    if max(degrees) == n - 1:
        return f"S_{n}"
    inner = [v for v in range(n) if degrees[v] > 1]
    if len(inner) == 2 and g.has_edge(*inner):
        d = min(degrees[inner[0]], degrees[inner[1]])
        return f"S_{{{d},{n - d}}}"
    return f"tree[{tree_canonical_form(g)}]"
