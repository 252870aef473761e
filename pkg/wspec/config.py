"""
config.py
---------

This module defines configuration classes for wspec based on the environment.

Classes:
    - Config: Base configuration common to all environments.
    - DevelopmentConfig: Configuration for development.
    - TestingConfig: Configuration for testing.
    - ProductionConfig: Configuration for production.

Each class exposes the numeric defaults used by the library, the CLI and the
HTTP surface: property grid bound, tolerances, iteration budgets, enumeration
cap and worker count. Every value can be overridden with an environment
variable (see SETTINGS below) or a `.env.<env>` file.
"""

import os
from dotenv import load_dotenv

ENVIRONMENT_VARIABLE = "WSPEC_ENV"

# Load .env file ONLY if not running in Docker
if not os.environ.get("IN_DOCKER_CONTAINER") and not os.environ.get(
    "APP_MODE"
):
    env = os.environ.get(ENVIRONMENT_VARIABLE, "development")
    ENV_FILE = f".env.{env}"
    if os.path.exists(ENV_FILE):
        load_dotenv(ENV_FILE)
    # Fallback to generic .env if environment-specific file doesn't exist
    elif os.path.exists(".env"):
        load_dotenv(".env")


def _env_int(name, default):
    return int(os.environ.get(name, default))


def _env_float(name, default):
    return float(os.environ.get(name, default))


class Config:
    """Base configuration common to all environments."""

    SECRET_KEY = os.environ.get("SECRET_KEY", "dev")
    DEBUG = False
    TESTING = False

    # Property checkers
    GRID_DELTA = _env_int("WSPEC_GRID_DELTA", 50)
    PROPERTY_TOLERANCE = _env_float("WSPEC_PROPERTY_TOLERANCE", 1e-12)

    # Spectral
    EQUITABLE_TOLERANCE = _env_float("WSPEC_EQUITABLE_TOLERANCE", 1e-9)
    POWER_MAX_ITERATIONS = _env_int("WSPEC_POWER_MAX_ITER", 100000)
    MAX_MATRIX_ORDER = _env_int("WSPEC_MAX_ORDER", 4096)

    # Enumeration and harness
    ENUMERATION_CAP = _env_int("WSPEC_ENUM_CAP", 18)
    TABLE_TOLERANCE = _env_float("WSPEC_TABLE_TOLERANCE", 0.1)
    DEFAULT_JOBS = _env_int("WSPEC_JOBS", 1)

    # HTTP surface limits (requests must stay short)
    HTTP_MAX_CHAIN_ORDER = 50
    HTTP_MAX_PATH_ORDER = 60
    HTTP_MAX_GRAPH_ORDER = 200


class DevelopmentConfig(Config):
    """Configuration for the development environment."""

    DEBUG = True


class TestingConfig(Config):
    """Configuration for the testing environment."""

    TESTING = True


class ProductionConfig(Config):
    """Configuration for the production environment."""

    DEBUG = False


CONFIG_CLASSES = {
    "development": "wspec.config.DevelopmentConfig",
    "testing": "wspec.config.TestingConfig",
    "production": "wspec.config.ProductionConfig",
}

_CLASSES = {
    "development": DevelopmentConfig,
    "testing": TestingConfig,
    "production": ProductionConfig,
}


def get_config(env=None):
    """
    Return the configuration class for an environment name.

    Args:
        env (str, optional): Environment name; defaults to WSPEC_ENV.

    Returns:
        type: One of the Config subclasses. Unknown names map to
        DevelopmentConfig.
    """
    if env is None:
        env = os.environ.get(ENVIRONMENT_VARIABLE, "development")
    return _CLASSES.get(env.lower(), DevelopmentConfig)
