"""Infix printers for expression trees.

Two concrete printers share one precedence walk:

* ``AsciiPrinter`` renders the canonical string (``x1 + x2``, ``x1*x2``,
  ``x1/x2``, ``x1^2``, ``sqrt(x1)``);
* ``LatexPrinter`` renders the decoder target (``\\frac{x_{1}}{x_{2}}``,
  ``x_{1}^{2}``, ``\\sqrt{x_{1}} + 3``).

Runs of identical factors in a product are printed as integer powers. Both
outputs are parsed back by the matching grammar in ``parsing``.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from abc import ABC, abstractmethod
from typing import List, Tuple

# symscale
from symscale.expressions.tree import Binary, BinaryOp, Expression, IntConstant, Unary, UnaryOp, Variable


def _is_negative(node: Expression) -> bool:
    return (isinstance(node, Unary) and node.op is UnaryOp.NEG) or \
        (isinstance(node, IntConstant) and node.value < 0)


def _is_sum(node: Expression) -> bool:
    return isinstance(node, Binary) and node.op in (BinaryOp.ADD, BinaryOp.SUB)


def _negated_child(node: Expression) -> Expression:
    if isinstance(node, IntConstant):
        return IntConstant(-node.value)
    return node.child


class ExpressionPrinter(ABC):
    """
    Precedence-aware printer; subclasses supply the concrete spellings.
    """

    _NAME: str = NotImplemented

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if cls._NAME is NotImplemented:
            raise NotImplementedError('Class attribute `_NAME` not implemented.')

    def render(self, expr: Expression) -> str:
        return self._sum(expr, leading=True)

    # --- spellings ----------------------------------------------------------

    @abstractmethod
    def variable(self, index: int) -> str:
        raise NotImplementedError

    @abstractmethod
    def function(self, op: UnaryOp, argument: str) -> str:
        raise NotImplementedError

    @abstractmethod
    def power(self, base: str, exponent: int) -> str:
        raise NotImplementedError

    @abstractmethod
    def product(self, factors: List[str]) -> str:
        raise NotImplementedError

    @abstractmethod
    def quotient(self, node: Binary) -> str:
        raise NotImplementedError

    # --- precedence walk ----------------------------------------------------

    def _sum(self, node: Expression, leading: bool) -> str:
        if _is_sum(node):
            left = self._sum(node.left, leading)
            if _is_sum(node.right):
                right = self._parenthesize(node.right)
            else:
                right = self._term(node.right, leading=False)
            return f'{left} {node.op.value} {right}'
        return self._term(node, leading)

    def _term(self, node: Expression, leading: bool) -> str:
        if _is_negative(node):
            child = _negated_child(node)
            if _is_sum(child) or _is_negative(child):
                text = '-' + self._parenthesize(child)
            else:
                text = '-' + self._term(child, leading=False)
            return text if leading else f'({text})'
        if isinstance(node, Binary) and node.op is BinaryOp.MUL:
            return self.product(self._factors(node))
        if isinstance(node, Binary) and node.op is BinaryOp.DIV:
            return self.quotient(node)
        return self._factor(node)

    def _factors(self, node: Binary) -> List[str]:
        flat: List[Expression] = []
        stack = [node]
        while stack:
            current = stack.pop()
            if isinstance(current, Binary) and current.op is BinaryOp.MUL:
                stack.append(current.right)
                stack.append(current.left)
            else:
                flat.append(current)
        runs: List[Tuple[Expression, int]] = []
        for factor in flat:
            if runs and runs[-1][0] == factor:
                runs[-1] = (factor, runs[-1][1] + 1)
            else:
                runs.append((factor, 1))
        return [self._powered(factor, count) for factor, count in runs]

    def _powered(self, node: Expression, count: int) -> str:
        text = self._product_operand(node)
        if count == 1:
            return text
        return self.power(text, count)

    def _product_operand(self, node: Expression) -> str:
        if _is_sum(node) or _is_negative(node):
            return self._parenthesize(node)
        if isinstance(node, Binary):
            return self._nested_operand(node)
        return self._factor(node)

    def _nested_operand(self, node: Binary) -> str:
        return self._parenthesize(node)

    def _factor(self, node: Expression) -> str:
        if isinstance(node, Variable):
            return self.variable(node.index)
        if isinstance(node, IntConstant):
            if node.value < 0:
                return self._parenthesize(node)
            return str(node.value)
        if isinstance(node, Unary) and node.op is not UnaryOp.NEG:
            return self.function(node.op, self._sum(node.child, leading=True))
        return self._parenthesize(node)

    def _parenthesize(self, node: Expression) -> str:
        return f'({self._sum(node, leading=True)})'


class AsciiPrinter(ExpressionPrinter):
    _NAME = 'ascii'

    def variable(self, index: int) -> str:
        return f'x{index}'

    def function(self, op: UnaryOp, argument: str) -> str:
        return f'{op.value}({argument})'

    def power(self, base: str, exponent: int) -> str:
        return f'{base}^{exponent}'

    def product(self, factors: List[str]) -> str:
        return '*'.join(factors)

    def quotient(self, node: Binary) -> str:
        left = node.left
        if _is_sum(left) or _is_negative(left):
            numerator = self._parenthesize(left)
        else:
            numerator = self._term(left, leading=False)
        right = node.right
        if isinstance(right, (Variable, Unary)) and not _is_negative(right) or \
                isinstance(right, IntConstant) and right.value >= 0:
            denominator = self._factor(right)
        else:
            denominator = self._parenthesize(right)
        return f'{numerator}/{denominator}'


class LatexPrinter(ExpressionPrinter):
    _NAME = 'latex'

    def variable(self, index: int) -> str:
        return f'x_{{{index}}}'

    def function(self, op: UnaryOp, argument: str) -> str:
        if op is UnaryOp.SQRT:
            return f'\\sqrt{{{argument}}}'
        return f'\\{op.value}({argument})'

    def power(self, base: str, exponent: int) -> str:
        return f'{base}^{{{exponent}}}'

    def product(self, factors: List[str]) -> str:
        return ' \\cdot '.join(factors)

    def quotient(self, node: Binary) -> str:
        numerator = self._sum(node.left, leading=True)
        denominator = self._sum(node.right, leading=True)
        return f'\\frac{{{numerator}}}{{{denominator}}}'

    def _nested_operand(self, node: Binary) -> str:
        if node.op is BinaryOp.DIV:
            return self.quotient(node)
        return self._parenthesize(node)


ASCII_PRINTER = AsciiPrinter()
LATEX_PRINTER = LatexPrinter()


def format_expression(expr: Expression) -> str:
    return ASCII_PRINTER.render(expr)


def to_latex(expr: Expression) -> str:
    """
    Render an expression as LaTeX: division as ``\\frac{..}{..}``, square
    roots as ``\\sqrt{..}``, repeated factors as ``^{k}`` and products with
    ``\\cdot``.
    """
    return LATEX_PRINTER.render(expr)
