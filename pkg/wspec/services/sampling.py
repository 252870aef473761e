"""
sampling.py
-----------

Seeded random instances for the monotonicity experiments.

One root SeedSequence per experiment is split into an independent child
stream per trial, so trial k draws the same instance whatever the number of
trials or workers.
"""

from __future__ import annotations

import math

import numpy as np

from wspec.exceptions import DisconnectedGraphError, InvalidParameterError
from wspec.models.graph import Graph
from wspec.services.enumeration import prufer_decode

MAX_CONNECT_RETRIES = 100
MAX_EDGE_PROBABILITY = 0.6


def trial_generators(seed: int, trials: int) -> list[np.random.Generator]:
    """One independent generator per trial, all derived from seed."""
    if trials < 1:
        raise InvalidParameterError(f"trials must be >= 1, got {trials}")
    children = np.random.SeedSequence(seed).spawn(trials)
    return [np.random.default_rng(child) for child in children]


def random_connected_graph(n: int, rng: np.random.Generator) -> Graph:
    """
    G(n, p) conditioned on connectivity, p uniform in [ln n / n, 0.6].

    Raises:
        DisconnectedGraphError: no connected draw in MAX_CONNECT_RETRIES.
    """
    if n < 2:
        raise InvalidParameterError(f"random graphs need n >= 2, got {n}")
    upper = np.triu_indices(n, k=1)
    for _ in range(MAX_CONNECT_RETRIES):
        p = rng.uniform(math.log(n) / n, MAX_EDGE_PROBABILITY)
        keep = rng.random(len(upper[0])) < p
        g = Graph.from_edges(
            n, zip(upper[0][keep].tolist(), upper[1][keep].tolist())
        )
        if g.is_connected():
            return g
    raise DisconnectedGraphError(
        f"no connected G({n}, p) draw in {MAX_CONNECT_RETRIES} attempts"
    )


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform random labeled tree via a random Prufer sequence."""
    if n < 1:
        raise InvalidParameterError(f"tree order must be >= 1, got {n}")
    if n == 1:
        return Graph(1)
    return prufer_decode(rng.integers(0, n, size=n - 2).tolist(), n)


def random_pair(n: int, rng: np.random.Generator) -> tuple[int, int]:
    """Two distinct vertices, in draw order."""
    v1, v2 = rng.choice(n, size=2, replace=False).tolist()
    return int(v1), int(v2)


def glue_tree(host: Graph, tree: Graph, u: int) -> Graph:
    """
    Hang tree at host vertex u by identifying tree vertex 0 with u.

    Tree vertex i > 0 becomes host.n + i - 1.
    """
    host.neighbors(u)

    def place(i):
        return u if i == 0 else host.n + i - 1

    edges = set(host.edges)
    for a, b in tree.edges:
        x, y = place(a), place(b)
        edges.add((min(x, y), max(x, y)))
    return Graph(host.n + tree.n - 1, frozenset(edges))
