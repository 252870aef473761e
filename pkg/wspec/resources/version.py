"""
version.py
----------

This module defines the VersionResource for exposing the current version
through a REST endpoint.
"""

from flask_restful import Resource

from wspec.utils import read_version

API_VERSION = read_version()


class VersionResource(Resource):
    """Resource for providing the wspec version."""

    def get(self):
        """
        Retrieve the current version.

        Returns:
            dict: {"version": ...} and HTTP status code 200.
        """
        return {"version": API_VERSION}, 200
