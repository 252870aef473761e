"""
Tests for the Kelmans operation, star collapse and pendant moves.
"""

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from tests.strategies import graph_with_pair, trees
from wspec.exceptions import (
    StarCollapseNoOpError,
    TransformPreconditionError,
    VertexRangeError,
)
from wspec.models.canonical import tree_canonical_form
from wspec.models.graph import Graph
from wspec.models.trees import double_star, path, spider_t1, star
from wspec.models.weight_function import forgotten, restricted_family, sombor
from wspec.services.spectral_service import weighted_radius
from wspec.services.transforms import (
    is_kelmans_trivial,
    kelmans,
    kelmans_context,
    move_pendant,
    pendant_tree_at,
    star_collapse,
    star_collapse_steps,
)


def _no_decrease(before, after):
    return after >= before - 1e-9 * max(1.0, before)


def _strict_increase(before, after):
    return after - before > 1e-10 * max(1.0, after)


def test_kelmans_context_split():
    ctx = kelmans_context(path(4), 1, 2)
    assert ctx.n1 == {0}
    assert ctx.n2 == {3}
    assert ctx.n3 == frozenset()
    assert not ctx.is_trivial


def test_kelmans_on_path_gives_star():
    g = kelmans(path(4), 1, 2)
    assert g.edges == frozenset({(0, 2), (1, 2), (2, 3)})
    assert g.degree(2) == 3


def test_kelmans_keeps_common_neighbours():
    # 0 and 1 share neighbour 2; 3 is private to 0, 4 private to 1
    g = Graph.from_edges(5, [(0, 2), (1, 2), (0, 3), (1, 4)])
    h = kelmans(g, 0, 1)
    assert h.has_edge(0, 2) and h.has_edge(1, 3)
    assert h.degree(0) == 1
    assert h.size == g.size


def test_kelmans_may_isolate_v1():
    h = kelmans(Graph.from_edges(4, [(0, 2), (1, 3)]), 0, 1)
    assert h.degree(0) == 0
    assert not h.is_connected()


def test_trivial_kelmans():
    assert is_kelmans_trivial(path(3), 0, 1)
    assert kelmans(path(3), 0, 1) == path(3)
    assert not is_kelmans_trivial(path(4), 1, 2)


def test_kelmans_preconditions():
    with pytest.raises(TransformPreconditionError):
        kelmans(path(3), 1, 1)
    with pytest.raises(VertexRangeError):
        kelmans(path(3), 0, 3)


@settings(max_examples=60, deadline=None)
@given(graph_with_pair(), st.sampled_from(restricted_family()))
def test_kelmans_never_decreases_radius(case, f):
    g, v1, v2 = case
    h = kelmans(g, v1, v2)
    assert h.size == g.size
    assert _no_decrease(weighted_radius(g, f), weighted_radius(h, f))


def test_pendant_tree_at():
    # triangle 0-1-2 with the path 2-3-4 hanging off vertex 2
    g = Graph.from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])
    assert pendant_tree_at(g, 2) == [2, 3, 4]
    with pytest.raises(TransformPreconditionError):
        pendant_tree_at(g, 0)


def test_spider_collapses_to_star():
    steps = star_collapse_steps(spider_t1(), 0)
    assert len(steps) == 4
    assert steps[-1] == star(7)
    radii = [weighted_radius(g, sombor()) for g in steps]
    assert all(_strict_increase(a, b) for a, b in zip(radii, radii[1:]))


def test_collapse_inside_a_cyclic_host():
    g = Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5)])
    h = star_collapse(g, 2)
    assert h.degree(2) == 5
    assert all(h.degree(v) == 1 for v in (3, 4, 5))
    assert h.has_edge(0, 1)


def test_collapse_errors():
    with pytest.raises(StarCollapseNoOpError):
        star_collapse(star(5), 0)
    with pytest.raises(TransformPreconditionError):
        star_collapse(Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]), 0)


@pytest.mark.parametrize("g,u", [(path(4), 0), (star(6), 1), (spider_t1(), 6)])
def test_collapse_rejects_leaves(g, u):
    with pytest.raises(TransformPreconditionError):
        star_collapse_steps(g, u)


@settings(max_examples=40, deadline=None)
@given(trees(min_n=4, max_n=11), st.data())
def test_collapse_of_a_tree_is_a_star(g, data):
    inner = [v for v in range(g.n) if 2 <= g.degree(v) < g.n - 1]
    assume(inner)
    u = data.draw(st.sampled_from(inner))
    steps = star_collapse_steps(g, u)
    assert steps[-1].degree(u) == g.n - 1
    radii = [weighted_radius(h, sombor()) for h in steps]
    assert all(_strict_increase(a, b) for a, b in zip(radii, radii[1:]))


def test_move_pendant_along_double_stars():
    g = double_star(7, 15)
    h = move_pendant(g, 0, 1)
    assert tree_canonical_form(h) == tree_canonical_form(double_star(6, 15))
    assert weighted_radius(h, sombor()) > weighted_radius(g, sombor())


def test_move_pendant_turns_p4_into_star():
    h = move_pendant(double_star(2, 4), 0, 1)
    assert tree_canonical_form(h) == tree_canonical_form(star(4))
    assert h.is_connected()


def test_move_pendant_preconditions():
    g = double_star(6, 15)
    with pytest.raises(TransformPreconditionError):
        move_pendant(g, 1, 0)
    with pytest.raises(TransformPreconditionError):
        move_pendant(path(5), 0, 2)
    with pytest.raises(TransformPreconditionError):
        move_pendant(spider_t1(), 0, 1)


@settings(max_examples=40, deadline=None)
@given(graph_with_pair())
def test_kelmans_orientation_is_irrelevant(case):
    g, v1, v2 = case
    forward, backward = kelmans(g, v1, v2), kelmans(g, v2, v1)
    a, b = weighted_radius(forward, sombor()), weighted_radius(backward, sombor())
    assert a == pytest.approx(b, rel=1e-10, abs=1e-10)
    assert sorted(forward.degrees()) == sorted(backward.degrees())


@settings(max_examples=40, deadline=None)
@given(graph_with_pair(graphs=trees(min_n=3, max_n=11)))
def test_kelmans_orientation_on_trees(case):
    g, v1, v2 = case
    forward, backward = kelmans(g, v1, v2), kelmans(g, v2, v1)
    if forward.is_tree():
        assert tree_canonical_form(forward) == tree_canonical_form(backward)


@settings(max_examples=60, deadline=None)
@given(graph_with_pair())
def test_kelmans_degree_ledger(case):
    g, v1, v2 = case
    ctx = kelmans_context(g, v1, v2)
    h = kelmans(g, v1, v2)
    moved = len(ctx.n1)
    assert h.degree(v1) == g.degree(v1) - moved
    assert h.degree(v2) == g.degree(v2) + moved
    for v in range(g.n):
        if v not in (v1, v2):
            assert h.degree(v) == g.degree(v)


def _pendant_configuration(n1, n2, n3, with_h):
    """
    v1 = 0 and v2 = 1 adjacent, n1 pendants on v1, n2 on v2, n3 common
    neighbours; with_h hangs one extra pendant on every common neighbour.
    """
    edges = [(0, 1)]
    nxt = 2
    for owner, count in ((0, n1), (1, n2)):
        for _ in range(count):
            edges.append((owner, nxt))
            nxt += 1
    common = list(range(nxt, nxt + n3))
    nxt += n3
    for z in common:
        edges += [(0, z), (1, z)]
        if with_h:
            edges.append((z, nxt))
            nxt += 1
    return Graph.from_edges(nxt, edges)


PENDANT_CONFIGURATIONS = [
    (n1, n2, n3, with_h)
    for n1 in range(1, 6)
    for n2 in range(n1, 10)
    for n3 in range(0, 9)
    for with_h in (False, True)
    if n1 + n2 + n3 <= 10 and (n3 or not with_h)
]


@pytest.mark.parametrize("f", [sombor(), forgotten()], ids=lambda f: f.name)
def test_move_pendant_strictly_increases_radius(f):
    for n1, n2, n3, with_h in PENDANT_CONFIGURATIONS:
        g = _pendant_configuration(n1, n2, n3, with_h)
        h = move_pendant(g, 0, 1)
        assert h.degree(0) == n1 + n3
        assert h.degree(1) == n2 + n3 + 2
        assert h.is_connected()
        before, after = weighted_radius(g, f), weighted_radius(h, f)
        assert _strict_increase(before, after), (n1, n2, n3, with_h)
