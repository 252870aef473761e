"""
config.py
---------

This module defines the ConfigResource for exposing the numeric settings in
effect through a REST endpoint.
"""

import os

from flask import current_app
from flask_restful import Resource

from wspec.config import ENVIRONMENT_VARIABLE

EXPOSED_SETTINGS = (
    "GRID_DELTA",
    "PROPERTY_TOLERANCE",
    "EQUITABLE_TOLERANCE",
    "POWER_MAX_ITERATIONS",
    "MAX_MATRIX_ORDER",
    "ENUMERATION_CAP",
    "TABLE_TOLERANCE",
    "DEFAULT_JOBS",
    "HTTP_MAX_CHAIN_ORDER",
    "HTTP_MAX_PATH_ORDER",
    "HTTP_MAX_GRAPH_ORDER",
)


class ConfigResource(Resource):
    """Resource for providing the application configuration."""

    def get(self):
        """
        Retrieve the current configuration.

        Returns:
            dict: Environment name, log level and numeric settings, with
            HTTP status code 200.
        """
        config = {
            ENVIRONMENT_VARIABLE: os.getenv(ENVIRONMENT_VARIABLE),
            "LOG_LEVEL": os.getenv("LOG_LEVEL"),
        }
        config.update({key: current_app.config.get(key) for key in EXPOSED_SETTINGS})
        return config, 200
