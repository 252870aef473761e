"""
experiments.py
--------------

Bounded experiments over HTTP. Orders are capped by the HTTP_MAX_* settings
so every request answers quickly; exhaustive scans and sampling runs stay
on the command line.
"""

from flask import request
from flask_restful import Resource
from marshmallow import ValidationError

from wspec.exceptions import WspecError
from wspec.resources.base import (
    library_error_response,
    validation_error_response,
    weight_from,
)
from wspec.schemas.report_schema import (
    ChainRequestSchema,
    ExperimentReportSchema,
    PathBoundsRequestSchema,
)
from wspec.services.experiments import (
    run_double_star_chain,
    run_path_bounds,
    run_table1,
)

report_schema = ExperimentReportSchema()
chain_request_schema = ChainRequestSchema()
path_bounds_request_schema = PathBoundsRequestSchema()


class Table1Resource(Resource):
    """GET /experiments/table1"""

    def get(self):
        return report_schema.dump(run_table1()), 200


class ChainResource(Resource):
    """GET /experiments/chain?f=NAME&n=N"""

    def get(self):
        try:
            args = chain_request_schema.load(request.args)
            return report_schema.dump(run_double_star_chain(weight_from(args), args["n"])), 200
        except ValidationError as e:
            return validation_error_response(e, "chain")
        except WspecError as e:
            return library_error_response(e, "chain")


class PathBoundsResource(Resource):
    """GET /experiments/pathbounds?f=NAME&n_hi=N"""

    def get(self):
        try:
            args = path_bounds_request_schema.load(request.args)
            report = run_path_bounds(weight_from(args), args["n_hi"])
            return report_schema.dump(report), 200
        except ValidationError as e:
            return validation_error_response(e, "pathbounds")
        except WspecError as e:
            return library_error_response(e, "pathbounds")
