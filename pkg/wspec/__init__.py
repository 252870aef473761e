"""
__init__.py
-----------

wspec: spectra of degree-weighted adjacency matrices of graphs.

The library lives in wspec.models and wspec.services, the command line in
wspec.cli. This module holds the factory of the small read-only HTTP
service that exposes bounded computations.

Functions:
    - register_extensions(app): Initialize and register Flask extensions.
    - register_error_handlers(app): Register custom error handlers for the app.
    - create_app(config_class): Application factory that creates and configures
      the Flask app.
"""

import os

from flask import Flask, request
from flask_cors import CORS

from wspec.config import ENVIRONMENT_VARIABLE
from wspec.logger import logger
from wspec.utils import read_version

__version__ = read_version()


def register_extensions(app):
    """
    Initialize and register Flask extensions on the application.

    Args:
        app (Flask): The Flask application instance.
    """
    if app.config.get("DEBUG"):
        CORS(app, resources={r"/*": {"origins": "*"}})
    logger.info("Extensions registered successfully.")


def _error_response(message, status):
    logger.warning(message, path=request.path, method=request.method)
    return {"message": message, "path": request.path, "method": request.method}, status


def register_error_handlers(app):
    """
    Register custom error handlers for the Flask application.

    Args:
        app (Flask): The Flask application instance.
    """

    @app.errorhandler(400)
    def bad_request(err):  # pylint: disable=unused-argument
        return _error_response("Bad request", 400)

    @app.errorhandler(404)
    def not_found(err):  # pylint: disable=unused-argument
        return _error_response("Resource not found", 404)

    @app.errorhandler(405)
    def method_not_allowed(err):  # pylint: disable=unused-argument
        return _error_response("Method not allowed", 405)

    @app.errorhandler(415)
    def unsupported_media_type(err):  # pylint: disable=unused-argument
        return _error_response("Unsupported media type", 415)

    @app.errorhandler(500)
    def internal_error(err):
        logger.error(
            "Internal server error",
            exc_info=True,
            path=request.path,
            method=request.method,
        )
        response = {
            "message": "Internal server error",
            "path": request.path,
            "method": request.method,
        }
        if app.config.get("DEBUG"):
            response["exception"] = str(err)
        return response, 500

    logger.info("Error handlers registered successfully.")


def create_app(config_class):
    """
    Factory to create and configure the Flask application.

    Args:
        config_class: The configuration class or import path to use for Flask.

    Returns:
        Flask: The configured and ready-to-use Flask application instance.
    """
    # Deferred: routes import the whole service layer.
    from wspec.routes import register_routes  # pylint: disable=import-outside-toplevel

    app = Flask(__name__)
    app.config.from_object(config_class)

    env = os.getenv(ENVIRONMENT_VARIABLE)
    logger.info("Creating app in environment.", environment=env)

    register_extensions(app)
    register_error_handlers(app)
    register_routes(app)

    logger.info("App created successfully.")
    return app
