"""
health.py
---------
Health check resource.

Besides liveness, the check runs both eigensolvers on a tiny fixture
(A(P_3), radius sqrt 2) so a broken numeric stack reports unhealthy.
"""

import math
import os
from datetime import datetime, timezone

from flask_restful import Resource

from wspec.config import ENVIRONMENT_VARIABLE
from wspec.exceptions import WspecError
from wspec.logger import logger
from wspec.models.trees import path
from wspec.resources.version import API_VERSION
from wspec.services.spectral_service import adjacency_matrix, cross_checked_radius


class HealthResource(Resource):
    """Resource for the health check endpoint."""

    def get(self):
        """
        GET /health

        Status Codes:
            - 200: Service is healthy and all checks pass
            - 503: The eigensolver self-check failed
        """
        logger.debug("Health check requested")

        health_data = {
            "status": "healthy",
            "service": "wspec",
            "timestamp": datetime.now(timezone.utc)
            .isoformat()
            .replace("+00:00", "Z"),
            "version": API_VERSION,
            "environment": os.getenv(ENVIRONMENT_VARIABLE, "development"),
            "checks": {},
        }

        solver_status = self._check_eigensolvers()
        health_data["checks"]["eigensolvers"] = solver_status
        if not solver_status["healthy"]:
            health_data["status"] = "unhealthy"
            return health_data, 503
        return health_data, 200

    def _check_eigensolvers(self):
        try:
            rho = cross_checked_radius(adjacency_matrix(path(3)))
        except (WspecError, ArithmeticError) as e:
            logger.error(f"Eigensolver health check failed: {str(e)}")
            return {"healthy": False, "message": f"Eigensolver failed: {str(e)}"}
        if abs(rho - math.sqrt(2.0)) > 1e-12:
            return {"healthy": False, "message": f"Unexpected radius {rho!r}"}
        return {"healthy": True, "message": "Jacobi and power iteration agree"}
