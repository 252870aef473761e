"""
Tests for rooted and free tree enumeration and the Prufer oracles.
"""

import networkx as nx
import pytest

from wspec.config import Config
from wspec.exceptions import InvalidParameterError
from wspec.models.canonical import tree_canonical_form
from wspec.models.trees import describe_tree, star
from wspec.services import enumeration
from wspec.services.enumeration import (
    caterpillars_max_degree_three,
    count_free_trees,
    double_star_chain,
    extend_by_leaf,
    free_trees,
    level_sequence_edges,
    prufer_decode,
    prufer_free_trees,
    rooted_trees,
)

FREE_TREE_COUNTS = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]
ROOTED_TREE_COUNTS = [1, 1, 2, 4, 9, 20, 48, 115, 286]


@pytest.fixture
def fresh_catalog(monkeypatch):
    monkeypatch.setattr(enumeration, "_catalog", [])
    monkeypatch.setattr(enumeration, "_sizes", [])
    monkeypatch.setattr(enumeration, "_by_size", {})
    return enumeration


@pytest.mark.parametrize("n,expected", enumerate(FREE_TREE_COUNTS, start=1))
def test_free_tree_counts(n, expected):
    assert count_free_trees(n) == expected


@pytest.mark.parametrize("k,expected", enumerate(ROOTED_TREE_COUNTS, start=1))
def test_rooted_tree_counts(k, expected):
    assert len(rooted_trees(k)) == expected


def test_rooted_trees_are_sorted_level_sequences():
    assert rooted_trees(3) == [(0, 1, 1), (0, 1, 2)]
    assert all(seq[0] == 0 for seq in rooted_trees(6))


def test_level_sequence_edges():
    assert level_sequence_edges((0, 1, 2, 1)) == [(0, 1), (1, 2), (0, 3)]
    assert level_sequence_edges((0, 1), offset=3) == [(3, 4)]


@pytest.mark.parametrize("n", range(1, 13))
def test_free_trees_are_distinct_trees(n):
    graphs = list(free_trees(n))
    assert all(g.is_tree() and g.n == n for g in graphs)
    assert len({tree_canonical_form(g) for g in graphs}) == len(graphs)


@pytest.mark.parametrize("n", range(1, 9))
def test_prufer_oracle_agrees(n):
    assert {tree_canonical_form(g) for g in free_trees(n)} == prufer_free_trees(n)


@pytest.mark.parametrize("n", range(1, 11))
def test_leaf_extension_oracle_agrees(n):
    assert extend_by_leaf(free_trees(n)) == {
        tree_canonical_form(g) for g in free_trees(n + 1)
    }


def test_order_bounds():
    with pytest.raises(InvalidParameterError):
        list(free_trees(0))
    with pytest.raises(InvalidParameterError):
        list(free_trees(Config.ENUMERATION_CAP + 1))
    with pytest.raises(InvalidParameterError):
        rooted_trees(0)
    with pytest.raises(InvalidParameterError):
        prufer_free_trees(10)


def test_prufer_decode():
    assert prufer_decode([3, 3], 4) == star(4).relabel([3, 0, 1, 2])
    assert prufer_decode([], 2).edges == frozenset({(0, 1)})
    with pytest.raises(InvalidParameterError):
        prufer_decode([0], 4)
    with pytest.raises(InvalidParameterError):
        prufer_decode([0, 7], 4)


def test_double_star_chain():
    labels = [describe_tree(g) for g in double_star_chain(8)]
    assert labels == ["S_{4,4}", "S_{3,5}", "S_{2,6}", "S_8"]
    assert [describe_tree(g) for g in double_star_chain(4)] == ["P_4", "S_4"]
    with pytest.raises(InvalidParameterError):
        double_star_chain(3)


def test_caterpillars_max_degree_three():
    assert len(caterpillars_max_degree_three(5)) == 1
    assert len(caterpillars_max_degree_three(6)) == 3
    assert all(g.max_degree() == 3 for g in caterpillars_max_degree_three(9))


@pytest.mark.parametrize("n", range(3, 13))
def test_counts_match_networkx(n):
    assert count_free_trees(n) == sum(1 for _ in nx.nonisomorphic_trees(n))


@pytest.mark.parametrize(
    "sequence", [[0, 0, 0], [4, 3, 2], [1, 4, 1, 4], [5, 5, 0, 2, 2, 7]]
)
def test_prufer_decode_matches_networkx(sequence):
    n = len(sequence) + 2
    expected = frozenset(
        (min(u, v), max(u, v)) for u, v in nx.from_prufer_sequence(sequence).edges()
    )
    assert prufer_decode(sequence, n).edges == expected


@pytest.mark.parametrize(
    "n,count,largest", [(1, 1, 1), (2, 1, 1), (11, 235, 5), (12, 551, 6)]
)
def test_free_trees_only_build_branches_up_to_half(fresh_catalog, n, count, largest):
    assert sum(1 for _ in fresh_catalog.free_trees(n)) == count
    assert max(fresh_catalog._by_size) == largest
