"""
report_schema.py
----------------

Marshmallow schemas for reports, catalog entries and HTTP requests.
"""

from marshmallow import Schema, ValidationError, fields, validate

from wspec.config import Config
from wspec.models.report import STATUSES


def validate_edge(value):
    """An edge is a pair of distinct nonnegative vertex indices."""
    if len(value) != 2 or value[0] == value[1] or min(value) < 0:
        raise ValidationError("Edge must be two distinct nonnegative integers")
    return value


# Response schemas


class ReportRowSchema(Schema):
    """One instance row of an experiment."""

    label = fields.String(required=True)
    status = fields.String(required=True, validate=lambda x: x in STATUSES)
    values = fields.Dict(keys=fields.String())
    detail = fields.String()


class ExperimentReportSchema(Schema):
    """Full experiment report; verdict derives from the rows."""

    experiment = fields.String(required=True)
    parameters = fields.Dict(keys=fields.String())
    columns = fields.List(fields.String())
    rows = fields.List(fields.Nested(ReportRowSchema))
    notes = fields.Dict(keys=fields.String())
    verdict = fields.String(dump_only=True)
    counts = fields.Method("get_counts", dump_only=True)

    def get_counts(self, obj):
        return obj.counts()


class WeightFunctionSchema(Schema):
    """Catalog entry of a weight function."""

    name = fields.String(required=True)
    label = fields.String(dump_only=True)
    formula = fields.String()
    params = fields.Method("get_params", dump_only=True)
    declared_flags = fields.Method("get_flags", dump_only=True)

    def get_params(self, obj):
        return {k: v for k, v in obj.params if isinstance(v, (int, float))}

    def get_flags(self, obj):
        return sorted(obj.declared_flags)


class SolverAgreementSchema(Schema):
    """Jacobi and power-method radii behind a reported rho."""

    jacobi = fields.Float(required=True)
    power = fields.Float(allow_none=True)
    difference = fields.Float(allow_none=True)
    agree = fields.Boolean(required=True)


class RadiusResponseSchema(Schema):
    """rho(A_f(G)) of a posted graph."""

    f = fields.String(required=True)
    n = fields.Integer(required=True)
    m = fields.Integer(required=True)
    rho = fields.Float(required=True)
    spectrum = fields.List(fields.Float())
    topological_index = fields.Float()
    eigenvector = fields.List(fields.Float(), allow_none=True)
    solvers = fields.Nested(SolverAgreementSchema)


class ErrorResponseSchema(Schema):
    """Error payload shared by the HTTP resources."""

    error = fields.String(required=True)
    message = fields.String(required=True)
    details = fields.Dict(allow_none=True)


# Request schemas


class FunctionRequestSchema(Schema):
    """A weight function by catalog name or expression, with parameters."""

    f = fields.String(required=True, validate=validate.Length(min=1, max=200))
    alpha = fields.Float(allow_none=True, load_default=None)
    p = fields.Float(allow_none=True, load_default=None)


class PropertiesRequestSchema(FunctionRequestSchema):
    delta = fields.Integer(
        load_default=lambda: Config.GRID_DELTA,
        validate=lambda x: 3 <= x <= 200,
    )


class RadiusRequestSchema(FunctionRequestSchema):
    """Graph as vertex count and edge list."""

    n = fields.Integer(
        required=True, validate=lambda x: 1 <= x <= Config.HTTP_MAX_GRAPH_ORDER
    )
    edges = fields.List(
        fields.List(fields.Integer(), validate=validate_edge), load_default=list
    )
    spectrum = fields.Boolean(load_default=False)


class ChainRequestSchema(FunctionRequestSchema):
    n = fields.Integer(
        required=True, validate=lambda x: 4 <= x <= Config.HTTP_MAX_CHAIN_ORDER
    )


class PathBoundsRequestSchema(FunctionRequestSchema):
    n_hi = fields.Integer(
        required=True, validate=lambda x: 3 <= x <= Config.HTTP_MAX_PATH_ORDER
    )
