"""Small helpers shared by the CLI and the HTTP resources."""

import os
from importlib import metadata

from wspec.exceptions import WspecError
from wspec.logger import logger

_VERSION_FILE = os.path.join(os.path.dirname(__file__), "..", "VERSION")


def read_version():
    """
    Read the version from the VERSION file, falling back to the installed
    distribution metadata.

    Returns:
        str: Version string, or "unknown".
    """
    try:
        with open(_VERSION_FILE, "r", encoding="utf-8") as f:
            return f.read().strip()
    except (OSError, UnicodeDecodeError):
        pass
    try:
        return metadata.version("wspec")
    except metadata.PackageNotFoundError:
        return "unknown"


def error_payload(exc):
    """
    Build the {error, message, details} payload for a library error.

    Args:
        exc (Exception): The raised exception.

    Returns:
        dict: Payload matching ErrorResponseSchema.
    """
    name = type(exc).__name__
    if not isinstance(exc, WspecError):
        logger.error(f"Unexpected error: {name}: {exc}")
    return {"error": name, "message": str(exc), "details": None}
