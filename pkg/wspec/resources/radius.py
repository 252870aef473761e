"""
radius.py
---------

POST /radius: rho(A_f(G)) of a small posted graph, with the Perron vector
(connected graphs only) and the radii found by both eigensolvers.

Request body:
    {"n": 4, "edges": [[0, 1], [1, 2], [2, 3]], "f": "sombor",
     "spectrum": false}
"""

from flask import request
from flask_restful import Resource
from marshmallow import ValidationError

from wspec.exceptions import SolverDisagreementError, WspecError
from wspec.logger import logger
from wspec.models.graph import Graph
from wspec.models.weight_function import topological_index
from wspec.resources.base import (
    library_error_response,
    validation_error_response,
    weight_from,
)
from wspec.schemas.report_schema import RadiusRequestSchema, RadiusResponseSchema
from wspec.services.spectral_service import (
    build_weighted_adjacency,
    eigen_spectrum,
    principal_eigenvector,
    solver_agreement,
)

radius_request_schema = RadiusRequestSchema()
radius_response_schema = RadiusResponseSchema()


class RadiusResource(Resource):
    """Spectral radius of A_f(G), cross-checked by both eigensolvers."""

    def post(self):
        try:
            data = radius_request_schema.load(request.get_json(silent=True) or {})
            f = weight_from(data)
            g = Graph.from_edges(data["n"], data["edges"])
            m = build_weighted_adjacency(g, f)
            solvers = solver_agreement(m)
            if not solvers["agree"]:
                raise SolverDisagreementError(
                    f"jacobi radius {solvers['jacobi']!r} and power radius "
                    f"{solvers['power']!r} disagree"
                )
            response = {
                "f": f.label,
                "n": g.n,
                "m": g.size,
                "rho": solvers["jacobi"],
                "topological_index": topological_index(g, f),
                "solvers": solvers,
                # the Perron vector is only unique on a connected graph
                "eigenvector": (
                    principal_eigenvector(m).eigenvector.tolist()
                    if g.is_connected()
                    else None
                ),
            }
            if data["spectrum"]:
                response["spectrum"] = eigen_spectrum(m)
            logger.debug(f"radius computed for n={g.n}, m={g.size}, f={f.label}")
            return radius_response_schema.dump(response), 200
        except ValidationError as e:
            return validation_error_response(e, "radius")
        except WspecError as e:
            return library_error_response(e, "radius")
