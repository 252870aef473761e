"""
expression.py
-------------

Mini-parser for user-supplied weight functions such as "sqrt(x^2+y^2)".

Grammar (Python expression syntax, with ^ accepted as power):
    expr := expr (+|-|*|/|^|**) expr | -expr | +expr | (expr)
          | number | x | y | sqrt(expr)

The source is parsed with `ast` and compiled into a tree of plain tuples, so
parsed expressions evaluate without `eval` and can be pickled into worker
processes.
"""

from __future__ import annotations

import ast
import math
import operator
from dataclasses import dataclass, field

from wspec.exceptions import ExpressionError

_BINARY = {
    ast.Add: ("add", operator.add),
    ast.Sub: ("sub", operator.sub),
    ast.Mult: ("mul", operator.mul),
    ast.Div: ("div", operator.truediv),
    ast.Pow: ("pow", operator.pow),
}
_BINARY_BY_TAG = {tag: fn for tag, fn in _BINARY.values()}
_FUNCTIONS = {"sqrt": math.sqrt}
_VARIABLES = ("x", "y")


def _compile(node: ast.AST) -> tuple:
    if isinstance(node, ast.Expression):
        return _compile(node.body)
    if isinstance(node, ast.BinOp) and type(node.op) in _BINARY:
        tag, _ = _BINARY[type(node.op)]
        return (tag, _compile(node.left), _compile(node.right))
    if isinstance(node, ast.UnaryOp) and isinstance(
        node.op, (ast.USub, ast.UAdd)
    ):
        inner = _compile(node.operand)
        return ("neg", inner) if isinstance(node.op, ast.USub) else inner
    if isinstance(node, ast.Constant) and type(node.value) in (int, float):
        return ("const", float(node.value))
    if isinstance(node, ast.Name) and node.id in _VARIABLES:
        return ("var", node.id)
    if (
        isinstance(node, ast.Call)
        and isinstance(node.func, ast.Name)
        and node.func.id in _FUNCTIONS
        and len(node.args) == 1
        and not node.keywords
    ):
        return ("call", node.func.id, _compile(node.args[0]))
    raise ExpressionError(
        f"unsupported syntax in weight expression: {ast.dump(node)[:60]}"
    )


def _evaluate(tree: tuple, x: float, y: float) -> float:
    tag = tree[0]
    if tag == "const":
        return tree[1]
    if tag == "var":
        return x if tree[1] == "x" else y
    if tag == "neg":
        return -_evaluate(tree[1], x, y)
    if tag == "call":
        return _FUNCTIONS[tree[1]](_evaluate(tree[2], x, y))
    return _BINARY_BY_TAG[tag](_evaluate(tree[1], x, y), _evaluate(tree[2], x, y))


@dataclass(frozen=True)
class WeightExpression:
    """A parsed custom weight function f(x, y)."""

    source: str
    tree: tuple = field(repr=False)

    def __call__(self, x: float, y: float) -> float:
        try:
            return float(_evaluate(self.tree, x, y))
        except (ArithmeticError, ValueError, TypeError) as exc:
            raise ExpressionError(
                f"cannot evaluate {self.source!r} at ({x}, {y}): {exc}"
            ) from exc


def parse_expression(text: str) -> WeightExpression:
    """
    Parse a weight expression in x and y.

    Raises:
        ExpressionError: empty input, syntax error or a disallowed construct
        (attribute access, unknown names or functions, comparisons...).
    """
    source = (text or "").strip()
    if not source:
        raise ExpressionError("empty weight expression")
    try:
        parsed = ast.parse(source.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"invalid weight expression {source!r}") from exc
    return WeightExpression(source=source, tree=_compile(parsed))
