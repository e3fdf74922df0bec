"""Arithmetic-expression evaluation used by every parser in the package.

Expressions are parsed with :mod:`ast` after rewriting ``^`` to ``**``, then
evaluated against a table of symbols.  Only ``+ - * / **``, parentheses,
integer literals and the registered symbol names are accepted.
"""

from __future__ import annotations

import ast
from typing import Any, Callable, Mapping

from .errors import ExpressionSyntaxError

_BINOPS = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def evaluate(text: str, symbols: Mapping[str, Any], integer: Callable[[int], Any]) -> Any:
    """Evaluate ``text`` using ``symbols`` for names and ``integer`` for literals."""
    if not isinstance(text, str) or not text.strip():
        raise ExpressionSyntaxError(f"empty expression: {text!r}")
    source = text.strip().replace("^", "**")
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise ExpressionSyntaxError(f"malformed expression {text!r}: {exc.msg}") from None
    return _eval(tree.body, symbols, integer, text)


def _exponent(node: ast.AST, text: str) -> int:
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return node.value
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        inner = _exponent(node.operand, text)
        return -inner if isinstance(node.op, ast.USub) else inner
    raise ExpressionSyntaxError(f"exponent must be an integer literal in {text!r}")


def _eval(node: ast.AST, symbols: Mapping[str, Any], integer: Callable[[int], Any], text: str) -> Any:
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            return _eval(node.left, symbols, integer, text) ** _exponent(node.right, text)
        op = _BINOPS.get(type(node.op))
        if op is None:
            raise ExpressionSyntaxError(f"unsupported operator in {text!r}")
        return op(_eval(node.left, symbols, integer, text), _eval(node.right, symbols, integer, text))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        value = _eval(node.operand, symbols, integer, text)
        return -value if isinstance(node.op, ast.USub) else value
    if isinstance(node, ast.Constant) and type(node.value) is int:
        return integer(node.value)
    if isinstance(node, ast.Name):
        try:
            return symbols[node.id]
        except KeyError:
            raise ExpressionSyntaxError(f"unknown symbol {node.id!r} in {text!r}") from None
    raise ExpressionSyntaxError(f"unsupported syntax in {text!r}")
