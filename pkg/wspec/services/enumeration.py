"""
enumeration.py
--------------

Generation of non-isomorphic trees.

Rooted trees are kept as canonical level sequences (pre-order depths) in a
module-level catalog ordered by (size, sequence). A rooted tree on k
vertices is a root plus a multiset of smaller catalog trees, so each class
is produced once by choosing catalog indices in non-decreasing order.

Free trees are rooted at their centroid:
    - one centroid: a root whose branches all have at most (n-1)//2 vertices;
    - two centroids (n even): two rooted trees of n/2 vertices joined at
      their roots, taken as an unordered pair.

Prufer decoding and leaf extension are independent oracles for tests.
"""

from __future__ import annotations

import heapq
import itertools
from typing import Iterable, Iterator, Sequence

from wspec.config import Config
from wspec.exceptions import InvalidParameterError
from wspec.models.canonical import tree_canonical_form
from wspec.models.graph import Graph
from wspec.models.trees import double_star, star

PRUFER_CAP = 9

_catalog: list[tuple[int, ...]] = []
_sizes: list[int] = []
_by_size: dict[int, range] = {}


def _forests(remaining: int, start: int, stop: int) -> Iterator[tuple[int, ...]]:
    """Non-decreasing catalog index tuples in [start, stop) summing to remaining."""
    if remaining == 0:
        yield ()
        return
    for i in range(start, stop):
        if _sizes[i] > remaining:
            break
        for rest in _forests(remaining - _sizes[i], i, stop):
            yield (i,) + rest


def _attach(children: Sequence[int]) -> tuple[int, ...]:
    """Level sequence of a root carrying the given catalog subtrees."""
    seq = [0]
    for i in children:
        seq.extend(d + 1 for d in _catalog[i])
    return tuple(seq)


def _ensure(k: int) -> None:
    while len(_by_size) < k:
        size = len(_by_size) + 1
        new = sorted(_attach(c) for c in _forests(size - 1, 0, len(_catalog)))
        start = len(_catalog)
        _catalog.extend(new)
        _sizes.extend([size] * len(new))
        _by_size[size] = range(start, len(_catalog))


def rooted_trees(k: int) -> list[tuple[int, ...]]:
    """Canonical level sequences of all rooted trees on k vertices."""
    if k < 1:
        raise InvalidParameterError(f"rooted tree size must be >= 1, got {k}")
    _ensure(k)
    return [_catalog[i] for i in _by_size[k]]


def level_sequence_edges(seq: Sequence[int], offset: int = 0) -> list[tuple[int, int]]:
    """Parent-child edges of a level sequence, vertices numbered from offset."""
    last_at_depth: list[int] = []
    edges = []
    for v, depth in enumerate(seq):
        del last_at_depth[depth:]
        if depth:
            edges.append((last_at_depth[depth - 1] + offset, v + offset))
        last_at_depth.append(v)
    return edges


def _check_order(n: int) -> None:
    cap = Config.ENUMERATION_CAP
    if not 1 <= n <= cap:
        raise InvalidParameterError(f"tree order must be in 1..{cap}, got {n}")


def free_trees(n: int) -> Iterator[Graph]:
    """
    Every tree on n vertices up to isomorphism, each exactly once.

    Raises:
        InvalidParameterError: n outside 1..ENUMERATION_CAP.
    """
    _check_order(n)
    _ensure(max(1, n // 2))
    branch_limit = (n - 1) // 2
    stop = _by_size[branch_limit].stop if branch_limit else 0
    for children in _forests(n - 1, 0, stop):
        yield Graph.from_edges(n, level_sequence_edges(_attach(children)))
    if n % 2 == 0:
        half = n // 2
        indices = _by_size[half]
        for i, j in itertools.combinations_with_replacement(indices, 2):
            edges = level_sequence_edges(_catalog[i])
            edges += level_sequence_edges(_catalog[j], offset=half)
            edges.append((0, half))
            yield Graph.from_edges(n, edges)


def count_free_trees(n: int) -> int:
    return sum(1 for _ in free_trees(n))


def double_star_chain(n: int) -> list[Graph]:
    """[S_{n//2, n-n//2}, ..., S_{2,n-2}, S_n]."""
    if n < 4:
        raise InvalidParameterError(f"double star chain needs n >= 4, got {n}")
    chain = [double_star(d, n) for d in range(n // 2, 1, -1)]
    chain.append(star(n))
    return chain


def caterpillars_max_degree_three(n: int) -> list[Graph]:
    """Trees on n vertices with maximum degree 3 whose inner vertices form a path."""
    result = []
    for g in free_trees(n):
        if g.max_degree() != 3:
            continue
        degrees = g.degrees()
        inner = [v for v in range(n) if degrees[v] > 1]
        if all(
            sum(1 for w in g.adjacency[v] if degrees[w] > 1) <= 2 for v in inner
        ):
            result.append(g)
    return result


# Oracles


def prufer_decode(sequence: Sequence[int], n: int) -> Graph:
    """
    Labeled tree of a Prufer sequence of length n-2 over 0..n-1.

    Raises:
        InvalidParameterError: bad length or label.
    """
    if n < 2 or len(sequence) != n - 2:
        raise InvalidParameterError(
            f"a Prufer sequence for n={n} must have length {n - 2}"
        )
    if any(not 0 <= s < n for s in sequence):
        raise InvalidParameterError(f"Prufer labels must lie in 0..{n - 1}")
    remaining = [1] * n
    for s in sequence:
        remaining[s] += 1
    leaves = [v for v in range(n) if remaining[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for s in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, s))
        remaining[s] -= 1
        if remaining[s] == 1:
            heapq.heappush(leaves, s)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return Graph.from_edges(n, edges)


def prufer_free_trees(n: int) -> set[str]:
    """Canonical forms of all labeled trees on n <= PRUFER_CAP vertices."""
    if not 1 <= n <= PRUFER_CAP:
        raise InvalidParameterError(
            f"Prufer brute force supports 1..{PRUFER_CAP}, got {n}"
        )
    if n == 1:
        return {tree_canonical_form(Graph(1))}
    return {
        tree_canonical_form(prufer_decode(seq, n))
        for seq in itertools.product(range(n), repeat=n - 2)
    }


def extend_by_leaf(trees: Iterable[Graph]) -> set[str]:
    """Canonical forms of every tree obtained by hanging one new leaf."""
    forms = set()
    for g in trees:
        for v in range(g.n):
            forms.add(tree_canonical_form(Graph(g.n + 1, g.edges | {(v, g.n)})))
    return forms
