"""
routes.py
-----------
Routes for the Flask application.
This module is responsible for registering the routes of the REST API
and linking them to the corresponding resources.
"""

from flask_restful import Api

from wspec.logger import logger
from wspec.resources.catalog import CatalogResource, PropertiesResource
from wspec.resources.config import ConfigResource
from wspec.resources.experiments import (
    ChainResource,
    PathBoundsResource,
    Table1Resource,
)
from wspec.resources.health import HealthResource
from wspec.resources.radius import RadiusResource
from wspec.resources.version import VersionResource


def register_routes(app):
    """
    Register the REST API routes on the Flask application.

    Args:
        app (Flask): The Flask application instance.
    """
    api = Api(app)

    # System endpoints
    api.add_resource(HealthResource, "/health")
    api.add_resource(VersionResource, "/version")
    api.add_resource(ConfigResource, "/config")

    # Weight functions
    api.add_resource(CatalogResource, "/catalog")
    api.add_resource(PropertiesResource, "/properties")

    # Spectra and bounded experiments
    api.add_resource(RadiusResource, "/radius")
    api.add_resource(Table1Resource, "/experiments/table1")
    api.add_resource(ChainResource, "/experiments/chain")
    api.add_resource(PathBoundsResource, "/experiments/pathbounds")

    logger.info("Routes registered successfully.")
