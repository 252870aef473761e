"""
catalog.py
----------

Weight function catalog and grid property verdicts.
"""

from flask import request
from flask_restful import Resource
from marshmallow import ValidationError

from wspec.exceptions import WspecError
from wspec.models.weight_function import catalog
from wspec.resources.base import (
    library_error_response,
    validation_error_response,
    weight_from,
)
from wspec.schemas.report_schema import (
    ExperimentReportSchema,
    PropertiesRequestSchema,
    WeightFunctionSchema,
)
from wspec.services.experiments import run_property_report

weight_function_schema = WeightFunctionSchema(many=True)
properties_request_schema = PropertiesRequestSchema()
report_schema = ExperimentReportSchema()


class CatalogResource(Resource):
    """GET /catalog: the eleven catalog functions with declared flags."""

    def get(self):
        return {"functions": weight_function_schema.dump(catalog())}, 200


class PropertiesResource(Resource):
    """GET /properties?f=NAME[&alpha=A|&p=P][&delta=D]"""

    def get(self):
        try:
            args = properties_request_schema.load(request.args)
            report = run_property_report(weight_from(args), args["delta"])
            return report_schema.dump(report), 200
        except ValidationError as e:
            return validation_error_response(e, "properties")
        except WspecError as e:
            return library_error_response(e, "properties")
