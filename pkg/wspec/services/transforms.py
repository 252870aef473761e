"""
transforms.py
-------------

Graph operations that never decrease rho(A_f(G)) for restricted f.

    - kelmans(g, v1, v2): move every private neighbour of v1 over to v2.
    - star_collapse(g, u): turn the pendant tree hanging at u into a star
      centred at u through a sequence of Kelmans operations.
    - move_pendant(g, v1, v2): move one pendant neighbour from v1 to its
      adjacent vertex v2 when v1 has no more private pendants than v2.

All functions are pure: they return new graphs and leave the input intact.
"""

from __future__ import annotations

from dataclasses import dataclass

from wspec.exceptions import (
    StarCollapseNoOpError,
    TransformPreconditionError,
)
from wspec.logger import logger
from wspec.models.graph import Graph


@dataclass(frozen=True)
class KelmansContext:
    """
    Neighbourhood split for an ordered vertex pair (v1, v2).

    Attributes:
        n1: N(v1) - N[v2], neighbours private to v1.
        n2: N(v2) - N[v1], neighbours private to v2.
        n3: N(v1) & N(v2), common neighbours.
    """

    v1: int
    v2: int
    n1: frozenset
    n2: frozenset
    n3: frozenset

    @property
    def is_trivial(self) -> bool:
        return not self.n1 or not self.n2


def kelmans_context(g: Graph, v1: int, v2: int) -> KelmansContext:
    """
    Raises:
        VertexRangeError: v1 or v2 out of range.
        TransformPreconditionError: v1 == v2.
    """
    a1, a2 = set(g.neighbors(v1)), set(g.neighbors(v2))
    if v1 == v2:
        raise TransformPreconditionError(f"kelmans needs two vertices, got {v1} twice")
    return KelmansContext(
        v1=v1,
        v2=v2,
        n1=frozenset(a1 - a2 - {v2}),
        n2=frozenset(a2 - a1 - {v1}),
        n3=frozenset(a1 & a2),
    )


def _move_edges(g: Graph, source: int, target: int, moved) -> Graph:
    edges = set(g.edges)
    for w in moved:
        edges.discard((min(source, w), max(source, w)))
        edges.add((min(target, w), max(target, w)))
    return Graph(g.n, frozenset(edges))


def kelmans(g: Graph, v1: int, v2: int) -> Graph:
    """
    Replace each edge v1-w by v2-w for w in N(v1) - N[v2].

    Vertex and edge counts are preserved; deg(v1) drops and deg(v2) grows
    by |N1|. The result may be disconnected (v1 isolated when it shares no
    neighbour with v2 and is not adjacent to it).
    """
    ctx = kelmans_context(g, v1, v2)
    return _move_edges(g, v1, v2, sorted(ctx.n1))


def is_kelmans_trivial(g: Graph, v1: int, v2: int) -> bool:
    """The operation yields an isomorphic graph iff N1 or N2 is empty."""
    return kelmans_context(g, v1, v2).is_trivial


def _components_without(g: Graph, u: int) -> list[list[int]]:
    seen = {u}
    result = []
    for start in range(g.n):
        if start in seen:
            continue
        seen.add(start)
        component = [start]
        for v in component:
            for w in g.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    component.append(w)
        result.append(sorted(component))
    return result


def pendant_tree_at(g: Graph, u: int) -> list[int]:
    """
    Vertices of the maximal pendant tree at u: u together with every
    component C of g - u such that C is a tree joined to u by one edge.

    Raises:
        TransformPreconditionError: u is not a cut vertex, or no such
            component exists.
    """
    g.neighbors(u)
    components = _components_without(g, u)
    if len(components) < 2:
        raise TransformPreconditionError(f"vertex {u} is not a cut vertex")
    vertices = [u]
    for component in components:
        members = set(component)
        links = sum(1 for w in g.adjacency[u] if w in members)
        inner = sum(
            1 for v in component for w in g.adjacency[v] if w in members
        ) // 2
        if links == 1 and inner == len(component) - 1:
            vertices.extend(component)
    if len(vertices) == 1:
        raise TransformPreconditionError(
            f"vertex {u} has no pendant tree (no tree-side component)"
        )
    return sorted(vertices)


def _distances_from(g: Graph, u: int, members: set) -> tuple[dict, dict]:
    """BFS depth and parent of every member, rooted at u."""
    depth, parent = {u: 0}, {u: -1}
    order = [u]
    for v in order:
        for w in g.adjacency[v]:
            if w in members and w not in depth:
                depth[w] = depth[v] + 1
                parent[w] = v
                order.append(w)
    return depth, parent


def star_collapse_steps(g: Graph, u: int) -> list[Graph]:
    """
    Graphs visited while collapsing the pendant tree at u into a star.

    Each step applies kelmans(w, x) where w is the farthest non-pendant
    vertex of the tree (smallest index on ties) and x its parent towards u,
    so w's leaf children move to x and w becomes pendant. x always keeps a
    neighbour outside N[w] (its own parent, or a second branch at the cut
    vertex u), so no step is trivial.

    Returns:
        list[Graph]: the input first, the collapsed graph last.

    Raises:
        TransformPreconditionError: u is not a cut vertex with a pendant tree.
        StarCollapseNoOpError: the pendant tree is already a star at u.
    """
    members = set(pendant_tree_at(g, u))
    if all(g.has_edge(u, v) for v in members - {u}):
        raise StarCollapseNoOpError(
            f"pendant tree at {u} is already a star centred at {u}"
        )
    steps = [g]
    current = g
    while True:
        depth, parent = _distances_from(current, u, members)
        inner = [
            v for v in members if v != u and len(current.adjacency[v]) > 1
        ]
        if not inner:
            break
        w = min(inner, key=lambda v: (-depth[v], v))
        current = kelmans(current, w, parent[w])
        steps.append(current)
    logger.debug(
        f"star collapse at {u}: tree of {len(members)} vertices, "
        f"{len(steps) - 1} kelmans steps"
    )
    return steps


def star_collapse(g: Graph, u: int) -> Graph:
    """The graph with u's pendant tree replaced by a star centred at u."""
    return star_collapse_steps(g, u)[-1]


def move_pendant(g: Graph, v1: int, v2: int) -> Graph:
    """
    Move the smallest-index private pendant of v1 to v2.

    Requires v1v2 to be an edge, every private neighbour of v1 and of v2 to
    be pendant, and 1 <= n1 <= n2. Degrees go from (n1+n3+1, n2+n3+1) to
    (n1+n3, n2+n3+2) and connectivity is kept. With n1 = 1 and no common
    neighbours, v1 itself becomes a pendant of v2 (S_{2,2} -> S_4).

    Raises:
        TransformPreconditionError: any structural precondition fails.
    """
    if v1 == v2 or not g.has_edge(v1, v2):
        raise TransformPreconditionError(f"{v1} and {v2} must be adjacent")
    ctx = kelmans_context(g, v1, v2)
    private = ctx.n1 | ctx.n2
    if any(g.degree(w) != 1 for w in private):
        raise TransformPreconditionError(
            "private neighbours of v1 and v2 must all be pendant"
        )
    if not 1 <= len(ctx.n1) <= len(ctx.n2):
        raise TransformPreconditionError(
            f"need 1 <= n1 <= n2, got n1={len(ctx.n1)}, n2={len(ctx.n2)}"
        )
    return _move_edges(g, v1, v2, [min(ctx.n1)])
