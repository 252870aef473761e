"""
conftest.py
-----------

Shared pytest fixtures: the Flask app and client, plus the graph and
weight-function fixtures reused across the suite.
"""

import os

from pytest import fixture

os.environ["WSPEC_ENV"] = "testing"

# pylint: disable=wrong-import-position
from wspec import create_app
from wspec.models.trees import double_star, path, spider_t1, star
from wspec.models.weight_function import (
    restricted_family,
    sombor,
    unit_weight,
)


@fixture
def app():
    """Flask application configured for testing."""
    app = create_app("wspec.config.TestingConfig")
    app.config.update({"TESTING": True})
    with app.app_context():
        yield app


@fixture
def client(app):
    """Test client for simulating HTTP requests."""
    return app.test_client()


@fixture
def sombor_f():
    return sombor()


@fixture
def unit_f():
    return unit_weight()


@fixture(params=restricted_family(), ids=lambda f: f.label)
def restricted_f(request):
    """Each restricted function, including the alpha/p sweeps."""
    return request.param


@fixture
def tree_fixtures():
    """Named trees used by spectral and quotient checks."""
    return {
        "P_4": path(4),
        "P_7": path(7),
        "S_5": star(5),
        "S_{3,4}": double_star(3, 7),
        "T_1": spider_t1(),
    }
