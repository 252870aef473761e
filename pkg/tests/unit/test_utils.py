"""
test_utils.py
-------------
Tests for the shared helpers.
"""

from unittest.mock import patch

from wspec import utils
from wspec.exceptions import NotATreeError


def test_read_version_from_file(tmp_path):
    version_file = tmp_path / "VERSION"
    version_file.write_text("2.5.1\n", encoding="utf-8")
    with patch.object(utils, "_VERSION_FILE", str(version_file)):
        assert utils.read_version() == "2.5.1"


def test_read_version_falls_back_to_metadata(tmp_path):
    with (
        patch.object(utils, "_VERSION_FILE", str(tmp_path / "missing")),
        patch.object(utils.metadata, "version", return_value="9.9.9"),
    ):
        assert utils.read_version() == "9.9.9"


def test_read_version_unknown(tmp_path):
    with (
        patch.object(utils, "_VERSION_FILE", str(tmp_path / "missing")),
        patch.object(
            utils.metadata, "version", side_effect=utils.metadata.PackageNotFoundError
        ),
    ):
        assert utils.read_version() == "unknown"


def test_error_payload():
    payload = utils.error_payload(NotATreeError("graph has a cycle"))
    assert payload == {
        "error": "NotATreeError",
        "message": "graph has a cycle",
        "details": None,
    }
