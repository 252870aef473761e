"""
canonical.py
------------

Tree isomorphism via canonical forms.

The canonical form of a tree is the AHU parenthesis encoding of the tree
rooted at its centroid; for bicentroidal trees the lexicographically smaller
of the two encodings is used. Two trees share a form iff they are isomorphic.
"""

from __future__ import annotations

from wspec.exceptions import NotATreeError
from wspec.models.graph import Graph


def _require_tree(g: Graph) -> None:
    if not g.is_tree():
        raise NotATreeError(
            f"expected a tree, got {g.n} vertices and {g.size} edges"
            + ("" if g.is_connected() else " (disconnected)")
        )


def _subtree_sizes(g: Graph, root: int) -> tuple[list[int], list[int]]:
    """Return (parent, subtree size) arrays for g rooted at root."""
    parent = [-1] * g.n
    order = [root]
    parent[root] = root
    for u in order:
        for w in g.adjacency[u]:
            if parent[w] == -1:
                parent[w] = u
                order.append(w)
    size = [1] * g.n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    parent[root] = -1
    return parent, size


def centroids(g: Graph) -> list[int]:
    """
    Return the one or two centroid vertices of a tree.

    A centroid minimizes the largest component left after its removal; every
    tree has one centroid or two adjacent ones.
    """
    _require_tree(g)
    if g.n == 1:
        return [0]
    parent, size = _subtree_sizes(g, 0)
    best, result = g.n, []
    for v in range(g.n):
        heaviest = g.n - size[v]
        for w in g.adjacency[v]:
            if w != parent[v]:
                heaviest = max(heaviest, size[w])
        if heaviest < best:
            best, result = heaviest, [v]
        elif heaviest == best:
            result.append(v)
    return result


def rooted_encoding(g: Graph, root: int, blocked: int = -1) -> str:
    """
    AHU encoding of the subtree hanging from root.

    Args:
        g (Graph): A tree (or forest component containing root).
        root (int): Root vertex.
        blocked (int): Vertex treated as the parent of root (excluded).
    """
    parent = {root: blocked}
    order = [root]
    for u in order:
        for w in g.adjacency[u]:
            if w != parent[u]:
                parent[w] = u
                order.append(w)
    codes: dict[int, str] = {}
    for u in reversed(order):
        children = sorted(
            codes.pop(w) for w in g.adjacency[u] if w != parent[u]
        )
        codes[u] = "(" + "".join(children) + ")"
    return codes[root]


def tree_canonical_form(g: Graph) -> str:
    """
    Canonical string of a tree, invariant under vertex relabeling.

    Raises:
        NotATreeError: g is disconnected or does not have n-1 edges.
    """
    return min(rooted_encoding(g, c) for c in centroids(g))
