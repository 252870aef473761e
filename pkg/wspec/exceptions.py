"""
exceptions.py
-------------

Exception hierarchy for the wspec package.

Every distinct failure named by an operation gets its own class so callers
(CLI, HTTP resources, tests) can tell a self-loop from a duplicate edge or a
reducible matrix from a convergence failure.

Classes:
    - WspecError: Root of the hierarchy.
    - GraphError and subclasses: graph construction and structure problems.
    - InvalidParameterError: out-of-range parameters.
    - WeightFunctionError, ExpressionError: weight-function evaluation/parsing.
    - SpectralError and subclasses: matrix and eigensolver problems.
    - TransformError and subclasses: graph transformation preconditions.
"""


class WspecError(Exception):
    """Base class for all wspec errors."""


# Graph structure


class GraphError(WspecError, ValueError):
    """Invalid graph or graph operation."""


class VertexRangeError(GraphError):
    """Vertex index outside 0..n-1."""


class SelfLoopError(GraphError):
    """Edge with identical endpoints."""


class DuplicateEdgeError(GraphError):
    """Edge already present."""


class MissingEdgeError(GraphError):
    """Edge expected but absent."""


class NotATreeError(GraphError):
    """Operation requires a tree (connected, n-1 edges)."""


class DisconnectedGraphError(GraphError):
    """Operation requires a connected graph."""


# Parameters and weight functions


class InvalidParameterError(WspecError, ValueError):
    """Parameter outside its documented range."""


class WeightFunctionError(WspecError, ValueError):
    """Weight function evaluated outside its domain or to a nonpositive value."""


class ExpressionError(WeightFunctionError):
    """Custom weight expression could not be parsed."""


# Spectral computations


class SpectralError(WspecError, ArithmeticError):
    """Base class for matrix and eigensolver errors."""


class NonSymmetricError(SpectralError):
    """Matrix is not exactly symmetric."""


class ReducibleMatrixError(SpectralError):
    """Matrix is reducible (underlying graph disconnected)."""


class ConvergenceError(SpectralError):
    """Iterative solver did not converge within its iteration budget."""


class InvalidPartitionError(SpectralError):
    """Partition blocks are empty, overlapping or not covering."""


class NonUnitVectorError(SpectralError):
    """Vector is not of unit Euclidean length."""


class SolverDisagreementError(SpectralError):
    """Jacobi and power-iteration radii disagree beyond tolerance."""


# Transformations


class TransformError(WspecError, ValueError):
    """Base class for graph transformation errors."""


class TransformPreconditionError(TransformError):
    """Structural precondition of a transformation is not met."""


class StarCollapseNoOpError(TransformError):
    """Pendant tree is already a star centred at the attachment vertex."""
