"""
base.py
-------

Shared error responses and request helpers for the wspec resources.
"""

from wspec.exceptions import InvalidParameterError, WeightFunctionError
from wspec.logger import logger
from wspec.models.weight_function import resolve_weight_function
from wspec.schemas.report_schema import ErrorResponseSchema

error_schema = ErrorResponseSchema()


def validation_error_response(e, context):
    """400 response for a marshmallow ValidationError."""
    logger.warning(f"Validation error in {context}: {e.messages}")
    return (
        error_schema.dump(
            {
                "error": "VALIDATION_ERROR",
                "message": "Invalid request data",
                "details": e.messages,
            }
        ),
        400,
    )


def library_error_response(e, context):
    """
    Map a library error to a response: bad parameters and unusable weight
    functions are the caller's fault (400); anything else the library
    refuses to compute is 422.
    """
    status = 400 if isinstance(e, (InvalidParameterError, WeightFunctionError)) else 422
    logger.warning(f"{context} refused: {type(e).__name__}: {e}")
    return (
        error_schema.dump(
            {"error": type(e).__name__, "message": str(e), "details": None}
        ),
        status,
    )


def weight_from(data):
    """Resolve the weight function named in a loaded request payload."""
    return resolve_weight_function(data["f"], alpha=data.get("alpha"), p=data.get("p"))

