"""
Tests for seeded instance sampling.
"""

import pytest

from wspec.exceptions import InvalidParameterError
from wspec.models.trees import path
from wspec.services.sampling import (
    glue_tree,
    random_connected_graph,
    random_pair,
    random_tree,
    trial_generators,
)


def test_trial_streams_do_not_depend_on_trial_count():
    few = trial_generators(7, 3)
    many = trial_generators(7, 8)
    assert random_tree(12, few[2]) == random_tree(12, many[2])


def test_same_seed_same_instances():
    a = [random_connected_graph(9, rng) for rng in trial_generators(11, 4)]
    b = [random_connected_graph(9, rng) for rng in trial_generators(11, 4)]
    assert a == b


@pytest.mark.parametrize("n", [2, 5, 15])
def test_random_instances_are_connected(n):
    for rng in trial_generators(n, 5):
        assert random_connected_graph(n, rng).is_connected()
        assert random_tree(n, rng).is_tree()


def test_random_pair_is_distinct():
    for rng in trial_generators(3, 20):
        v1, v2 = random_pair(4, rng)
        assert v1 != v2
        assert 0 <= v1 < 4 and 0 <= v2 < 4


def test_glue_tree_identifies_root_with_host_vertex():
    g = glue_tree(path(3), path(3), 2)
    assert g.n == 5
    assert g.edges == path(5).edges


def test_bad_parameters():
    with pytest.raises(InvalidParameterError):
        trial_generators(1, 0)
    with pytest.raises(InvalidParameterError):
        random_connected_graph(1, trial_generators(1, 1)[0])
