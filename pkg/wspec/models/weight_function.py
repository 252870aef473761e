"""
weight_function.py
------------------

Symmetric degree-based weight functions f(x, y) > 0.

Contents:
    - WeightFunction: a named, optionally parameterized evaluator with the
      property flags it claims (increasing, convex, restricted).
    - The catalog: six restricted functions (first Zagreb, first hyper-Zagreb,
      general sum-connectivity, forgotten, Sombor, p-Sombor) and five
      increasing+convex functions that are not restricted (second Zagreb,
      second hyper-Zagreb, first/second Gourava, first hyper-Gourava).
    - Property checkers on the integer grid 1..delta: increasing, convex,
      restricted (non-strict) and property P (strict).
    - topological_index: TI_f(G), the sum of f over edge endpoint degrees.

Properties are checked on integer degrees only, since only integer degrees
ever reach A_f(G).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from wspec.config import Config
from wspec.exceptions import InvalidParameterError, WeightFunctionError
from wspec.models.expression import parse_expression
from wspec.models.graph import Graph

INCREASING = "increasing"
CONVEX = "convex"
RESTRICTED = "restricted"
PROPERTY_P = "property_p"

RESTRICTED_FLAGS = frozenset({INCREASING, CONVEX, RESTRICTED})
CONVEX_INCREASING_FLAGS = frozenset({INCREASING, CONVEX})

DEFAULT_ALPHA = 3.0
DEFAULT_P = 3.0


@dataclass(frozen=True)
class WeightFunction:
    """
    A symmetric real function on positive degree pairs.

    Attributes:
        name (str): Catalog identifier or the source of a custom expression.
        evaluator (Callable): evaluator(x, y, **params) -> float. Must be a
            module-level function or a picklable callable.
        params (tuple): ((name, value), ...) keyword parameters.
        declared_flags (frozenset): Properties the function claims.
        formula (str): Display formula.
    """

    name: str
    evaluator: Callable = field(repr=False)
    params: tuple = ()
    declared_flags: frozenset = frozenset()
    formula: str = ""

    @property
    def label(self) -> str:
        """Name with parameters, e.g. "p_sombor(p=3)"."""
        if not self.params:
            return self.name
        inner = ",".join(f"{k}={v:g}" for k, v in self.params)
        return f"{self.name}({inner})"

    @property
    def is_restricted_declared(self) -> bool:
        return RESTRICTED in self.declared_flags

    def eval(self, x: float, y: float) -> float:
        """
        Evaluate f(x, y).

        Raises:
            WeightFunctionError: nonpositive argument, or a non-finite or
            nonpositive value.
        """
        if x <= 0 or y <= 0:
            raise WeightFunctionError(
                f"{self.label} is defined on positive arguments, got ({x}, {y})"
            )
        value = float(self.evaluator(x, y, **dict(self.params)))
        if not math.isfinite(value) or value <= 0:
            raise WeightFunctionError(
                f"{self.label}({x}, {y}) = {value} is not finite and positive"
            )
        return value

    __call__ = eval


# Evaluators (module level so WeightFunction pickles into worker processes)


def _first_zagreb(x, y):
    return x + y


def _first_hyper_zagreb(x, y):
    return (x + y) ** 2


def _general_sum_connectivity(x, y, alpha):
    return (x + y) ** alpha


def _forgotten(x, y):
    return x * x + y * y


def _sombor(x, y):
    return math.sqrt(x * x + y * y)


def _p_sombor(x, y, p):
    return (x**p + y**p) ** (1.0 / p)


def _second_zagreb(x, y):
    return x * y


def _second_hyper_zagreb(x, y):
    return (x * y) ** 2


def _first_gourava(x, y):
    return x + y + x * y


def _second_gourava(x, y):
    return (x + y) * x * y


def _first_hyper_gourava(x, y):
    return (x + y + x * y) ** 2


def _unit(x, y):  # pylint: disable=unused-argument
    return 1.0


def _custom(x, y, expression):
    return expression(x, y)


# Factories


def first_zagreb() -> WeightFunction:
    return WeightFunction(
        "first_zagreb", _first_zagreb, (), RESTRICTED_FLAGS, "x+y"
    )


def first_hyper_zagreb() -> WeightFunction:
    return WeightFunction(
        "first_hyper_zagreb", _first_hyper_zagreb, (), RESTRICTED_FLAGS, "(x+y)^2"
    )


def general_sum_connectivity(alpha: float = DEFAULT_ALPHA) -> WeightFunction:
    """(x+y)^alpha; restricted for alpha >= 1."""
    if alpha < 1:
        raise InvalidParameterError(
            f"general_sum_connectivity needs alpha >= 1, got {alpha}"
        )
    return WeightFunction(
        "general_sum_connectivity",
        _general_sum_connectivity,
        (("alpha", float(alpha)),),
        RESTRICTED_FLAGS,
        "(x+y)^alpha",
    )


def forgotten() -> WeightFunction:
    return WeightFunction("forgotten", _forgotten, (), RESTRICTED_FLAGS, "x^2+y^2")


def sombor() -> WeightFunction:
    return WeightFunction(
        "sombor", _sombor, (), RESTRICTED_FLAGS, "sqrt(x^2+y^2)"
    )


def p_sombor(p: float = DEFAULT_P) -> WeightFunction:
    """(x^p+y^p)^(1/p); restricted for p >= 1."""
    if p < 1:
        raise InvalidParameterError(f"p_sombor needs p >= 1, got {p}")
    return WeightFunction(
        "p_sombor",
        _p_sombor,
        (("p", float(p)),),
        RESTRICTED_FLAGS,
        "(x^p+y^p)^(1/p)",
    )


def second_zagreb() -> WeightFunction:
    return WeightFunction(
        "second_zagreb", _second_zagreb, (), CONVEX_INCREASING_FLAGS, "xy"
    )


def second_hyper_zagreb() -> WeightFunction:
    return WeightFunction(
        "second_hyper_zagreb",
        _second_hyper_zagreb,
        (),
        CONVEX_INCREASING_FLAGS,
        "(xy)^2",
    )


def first_gourava() -> WeightFunction:
    return WeightFunction(
        "first_gourava", _first_gourava, (), CONVEX_INCREASING_FLAGS, "x+y+xy"
    )


def second_gourava() -> WeightFunction:
    return WeightFunction(
        "second_gourava", _second_gourava, (), CONVEX_INCREASING_FLAGS, "(x+y)xy"
    )


def first_hyper_gourava() -> WeightFunction:
    return WeightFunction(
        "first_hyper_gourava",
        _first_hyper_gourava,
        (),
        CONVEX_INCREASING_FLAGS,
        "(x+y+xy)^2",
    )


def unit_weight() -> WeightFunction:
    """f = 1: A_f(G) is the ordinary adjacency matrix. Not in the catalog."""
    return WeightFunction("unit", _unit, (), RESTRICTED_FLAGS, "1")


_FACTORIES = {
    "first_zagreb": first_zagreb,
    "first_hyper_zagreb": first_hyper_zagreb,
    "general_sum_connectivity": general_sum_connectivity,
    "forgotten": forgotten,
    "sombor": sombor,
    "p_sombor": p_sombor,
    "second_zagreb": second_zagreb,
    "second_hyper_zagreb": second_hyper_zagreb,
    "first_gourava": first_gourava,
    "second_gourava": second_gourava,
    "first_hyper_gourava": first_hyper_gourava,
    "unit": unit_weight,
}


def catalog() -> list[WeightFunction]:
    """The eleven catalog functions, restricted ones first."""
    return [
        first_zagreb(),
        first_hyper_zagreb(),
        general_sum_connectivity(),
        forgotten(),
        sombor(),
        p_sombor(),
        second_zagreb(),
        second_hyper_zagreb(),
        first_gourava(),
        second_gourava(),
        first_hyper_gourava(),
    ]


def restricted_family() -> list[WeightFunction]:
    """Restricted functions with the parameter sweeps alpha, p in {1, 2, 3}."""
    return [
        first_zagreb(),
        first_hyper_zagreb(),
        *(general_sum_connectivity(a) for a in (1, 2, 3)),
        forgotten(),
        sombor(),
        *(p_sombor(p) for p in (1, 2, 3)),
    ]


def non_restricted_family() -> list[WeightFunction]:
    """The five increasing+convex functions lacking the restriction."""
    return [f for f in catalog() if not f.is_restricted_declared]


def custom_weight(source: str) -> WeightFunction:
    """Wrap a parsed expression; custom functions declare no flags."""
    expression = parse_expression(source)
    return WeightFunction(
        expression.source,
        _custom,
        (("expression", expression),),
        frozenset(),
        expression.source,
    )


def resolve_weight_function(
    name_or_expr: str,
    alpha: Optional[float] = None,
    p: Optional[float] = None,
) -> WeightFunction:
    """
    Look up a catalog function by name, otherwise parse a custom expression.

    Raises:
        InvalidParameterError: alpha/p given for a function that takes none,
            or out of range.
        ExpressionError: not a catalog name and not a valid expression.
    """
    name = name_or_expr.strip()
    if name == "general_sum_connectivity":
        if p is not None:
            raise InvalidParameterError("--p applies to p_sombor only")
        return general_sum_connectivity(DEFAULT_ALPHA if alpha is None else alpha)
    if name == "p_sombor":
        if alpha is not None:
            raise InvalidParameterError(
                "--alpha applies to general_sum_connectivity only"
            )
        return p_sombor(DEFAULT_P if p is None else p)
    if alpha is not None or p is not None:
        raise InvalidParameterError(
            f"{name!r} takes no alpha/p parameter"
        )
    if name in _FACTORIES:
        return _FACTORIES[name]()
    return custom_weight(name)


# Property checkers


@dataclass(frozen=True)
class PropertyVerdict:
    """Outcome of a grid check; counterexample is None on pass."""

    prop: str
    passed: bool
    counterexample: Optional[tuple] = None

    def __str__(self):
        if self.passed:
            return "pass"
        return "fail" + str(self.counterexample).replace(" ", "")


def _grid(f: WeightFunction, delta: int) -> np.ndarray:
    """table[x-1, y-1] = f(x, y) for 1 <= x, y <= delta."""
    return np.array(
        [[f(x, y) for y in range(1, delta + 1)] for x in range(1, delta + 1)]
    )


def _check_delta(delta: Optional[int], minimum: int) -> int:
    delta = Config.GRID_DELTA if delta is None else int(delta)
    if delta < minimum:
        raise InvalidParameterError(
            f"grid bound delta must be >= {minimum}, got {delta}"
        )
    return delta


def _tol(tol: Optional[float]) -> float:
    return Config.PROPERTY_TOLERANCE if tol is None else tol


def check_increasing(f, delta=None, tol=None) -> PropertyVerdict:
    """f(x+1, y) >= f(x, y) for 1 <= x < delta, 1 <= y <= delta."""
    delta = _check_delta(delta, 2)
    table = _grid(f, delta)
    bad = np.argwhere(table[1:, :] - table[:-1, :] < -_tol(tol))
    if len(bad):
        i, j = bad[0]
        return PropertyVerdict(INCREASING, False, (int(i) + 1, int(j) + 1))
    return PropertyVerdict(INCREASING, True)


def check_convex(f, delta=None, tol=None) -> PropertyVerdict:
    """f(x+1,y) - 2f(x,y) + f(x-1,y) >= -tol for 2 <= x <= delta-1."""
    delta = _check_delta(delta, 3)
    table = _grid(f, delta)
    second = table[2:, :] - 2.0 * table[1:-1, :] + table[:-2, :]
    bad = np.argwhere(second < -_tol(tol))
    if len(bad):
        i, j = bad[0]
        return PropertyVerdict(CONVEX, False, (int(i) + 2, int(j) + 1))
    return PropertyVerdict(CONVEX, True)


def _split_scan(f, delta, tol, strict, prop) -> PropertyVerdict:
    """
    For every sum s and splits x1 < x2 <= s/2 (so |x1-y1| > |x2-y2|),
    require f(x1, y1) >= f(x2, y2) (strict: > ).
    """
    table = _grid(f, delta)
    for s in range(2, 2 * delta + 1):
        xs = np.arange(max(1, s - delta), s // 2 + 1)
        if len(xs) < 2:
            continue
        vals = table[xs - 1, s - xs - 1]
        diff = vals[:, None] - vals[None, :]
        if strict:
            failing = diff <= tol
        else:
            failing = diff < -tol
        bad = np.argwhere(np.triu(failing, k=1))
        if len(bad):
            i, j = bad[0]
            x1, x2 = int(xs[i]), int(xs[j])
            return PropertyVerdict(prop, False, ((x1, s - x1), (x2, s - x2)))
    return PropertyVerdict(prop, True)


def check_restricted(f, delta=None, tol=None) -> PropertyVerdict:
    """Non-strict restriction: more unbalanced split of a sum never loses."""
    delta = _check_delta(delta, 3)
    return _split_scan(f, delta, _tol(tol), False, RESTRICTED)


def check_property_p(f, delta=None, tol=None) -> PropertyVerdict:
    """Strict variant: more unbalanced split of a sum strictly wins."""
    delta = _check_delta(delta, 3)
    return _split_scan(f, delta, _tol(tol), True, PROPERTY_P)


def property_verdicts(f, delta=None, tol=None) -> dict[str, PropertyVerdict]:
    """All four checker verdicts keyed by property name."""
    return {
        INCREASING: check_increasing(f, delta, tol),
        CONVEX: check_convex(f, delta, tol),
        RESTRICTED: check_restricted(f, delta, tol),
        PROPERTY_P: check_property_p(f, delta, tol),
    }


def computed_flags(f, delta=None, tol=None) -> frozenset:
    """Flags confirmed on the grid, comparable with declared_flags."""
    return frozenset(
        prop for prop, v in property_verdicts(f, delta, tol).items() if v.passed
    )


def is_restricted(f, delta=None) -> bool:
    """Increasing, convex and restricted on the grid."""
    return RESTRICTED_FLAGS <= computed_flags(f, delta)


def topological_index(g: Graph, f: WeightFunction) -> float:
    """TI_f(G): sum of f(d_u, d_v) over the edges of g."""
    degrees = g.degrees()
    return float(
        sum(f(degrees[u], degrees[v]) for u, v in g.sorted_edges())
    )
