"""
conftest.py for integration tests
----------------------------------

Everything under tests/integration runs the full experiments and is marked
`integration` and `slow`; deselect with `-m "not slow"`.
"""

import pytest


def pytest_collection_modifyitems(items):
    for item in items:
        if "tests/integration" in item.nodeid.replace("\\", "/"):
            item.add_marker(pytest.mark.integration)
            item.add_marker(pytest.mark.slow)
