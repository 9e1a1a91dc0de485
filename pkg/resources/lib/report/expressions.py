# -*- coding: utf-8 -*-
"""Numeric expressions in run configurations.

Matrix entries and parameters may be written as strings like
"1/sqrt(5) + 2*0.5". Only numbers, sqrt, +, -, * and / are accepted.
Expressions without sqrt evaluate exactly to a fractions.Fraction,
everything else to a float."""
import ast
import math
from fractions import Fraction

__all__ = ['ExpressionError', 'evaluate', 'exact_number']


class ExpressionError(ValueError):
    """The expression uses something outside the accepted grammar"""
    pass


_BINARY = {
    ast.Add: lambda a, b: a + b,
    ast.Sub: lambda a, b: a - b,
    ast.Mult: lambda a, b: a * b,
    ast.Div: lambda a, b: a / b,
}


def exact_number(value):
    """JSON number or numeric string as an exact Fraction when possible"""
    if isinstance(value, bool):
        raise ExpressionError('Booleans are not numbers')
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ExpressionError('Non-finite number {}'.format(value))
        return Fraction(repr(value))
    if isinstance(value, str):
        return evaluate(value)
    raise ExpressionError('Expected a number or an expression, got {!r}'
                          .format(value))


def evaluate(text):
    """Evaluate an arithmetic expression string"""
    try:
        tree = ast.parse(text.strip(), mode='eval')
    except SyntaxError:
        raise ExpressionError('Cannot parse expression {!r}'.format(text))
    try:
        result = _evaluate(tree.body)
    except ZeroDivisionError:
        raise ExpressionError('Division by zero in {!r}'.format(text))
    if isinstance(result, float) and not math.isfinite(result):
        raise ExpressionError('Expression {!r} is not finite'.format(text))
    return result


def _evaluate(node):
    if isinstance(node, ast.Constant) and not isinstance(node.value, bool):
        if isinstance(node.value, (int, float)):
            return exact_number(node.value)
    elif isinstance(node, ast.UnaryOp) and isinstance(node.op,
                                                      (ast.USub, ast.UAdd)):
        operand = _evaluate(node.operand)
        return -operand if isinstance(node.op, ast.USub) else operand
    elif isinstance(node, ast.BinOp) and type(node.op) in _BINARY:
        return _BINARY[type(node.op)](_evaluate(node.left),
                                      _evaluate(node.right))
    elif (isinstance(node, ast.Call) and isinstance(node.func, ast.Name)
          and node.func.id == 'sqrt' and len(node.args) == 1
          and not node.keywords):
        argument = _evaluate(node.args[0])
        if argument < 0:
            raise ExpressionError('sqrt of a negative number')
        return math.sqrt(argument)
    raise ExpressionError('Unsupported expression element {}'
                          .format(ast.dump(node)))
