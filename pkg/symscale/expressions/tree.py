"""Expression trees.

Expressions are immutable operator trees over variables ``x1..xn`` and integer
constants, with four binary operators (+, -, *, /) and four unary operators
(exp, sin, neg, sqrt). Trees are frozen dataclasses, so structural equality and
hashing come for free and instances can be shared between threads.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from enum import Enum
from dataclasses import dataclass
from typing import Iterator, Set, Union

# third-party imports
import numpy as np


class BinaryOp(str, Enum):
    ADD = '+'
    SUB = '-'
    MUL = '*'
    DIV = '/'


class UnaryOp(str, Enum):
    EXP = 'exp'
    SIN = 'sin'
    NEG = 'neg'
    SQRT = 'sqrt'


BINARY_OPS = (BinaryOp.ADD, BinaryOp.SUB, BinaryOp.MUL, BinaryOp.DIV)
UNARY_OPS = (UnaryOp.EXP, UnaryOp.SIN, UnaryOp.NEG, UnaryOp.SQRT)


@dataclass(frozen=True)
class Variable:
    index: int

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f'variable index must be >= 1, got {self.index}')


@dataclass(frozen=True)
class IntConstant:
    value: int


@dataclass(frozen=True)
class Unary:
    op: UnaryOp
    child: 'Expression'


@dataclass(frozen=True)
class Binary:
    op: BinaryOp
    left: 'Expression'
    right: 'Expression'


Expression = Union[Variable, IntConstant, Unary, Binary]


def iter_nodes(expr: Expression) -> Iterator[Expression]:
    """
    Pre-order traversal.
    """
    stack = [expr]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, Binary):
            stack.append(node.right)
            stack.append(node.left)
        elif isinstance(node, Unary):
            stack.append(node.child)


def depth(expr: Expression) -> int:
    if isinstance(expr, Binary):
        return 1 + max(depth(expr.left), depth(expr.right))
    if isinstance(expr, Unary):
        return 1 + depth(expr.child)
    return 0


def node_count(expr: Expression) -> int:
    return sum(1 for _ in iter_nodes(expr))


def variables(expr: Expression) -> Set[int]:
    return {node.index for node in iter_nodes(expr) if isinstance(node, Variable)}


def evaluate_batch(expr: Expression, inputs: np.ndarray) -> np.ndarray:
    """
    Evaluate an expression on every row of an (n_points, n_vars) matrix.

    Domain violations (sqrt of a negative number, division by zero, exp
    overflow) produce nan or inf entries instead of raising.
    """
    inputs = np.asarray(inputs, dtype=np.float64)
    if inputs.ndim != 2:
        raise ValueError(f'inputs must be 2-dimensional, got shape {inputs.shape}')
    with np.errstate(all='ignore'):
        return np.broadcast_to(_evaluate(expr, inputs), (inputs.shape[0],)).copy()


def evaluate(expr: Expression, point) -> float:
    """
    Evaluate an expression at a single point; non-finite results are values.
    """
    point = np.asarray(point, dtype=np.float64).reshape(1, -1)
    return float(evaluate_batch(expr, point)[0])


def _evaluate(expr: Expression, inputs: np.ndarray) -> np.ndarray:
    if isinstance(expr, Variable):
        if expr.index > inputs.shape[1]:
            raise ValueError(f'x{expr.index} used with only {inputs.shape[1]} input columns')
        return inputs[:, expr.index - 1]
    if isinstance(expr, IntConstant):
        return np.full(inputs.shape[0], float(expr.value))
    if isinstance(expr, Unary):
        child = _evaluate(expr.child, inputs)
        if expr.op is UnaryOp.EXP:
            return np.exp(child)
        if expr.op is UnaryOp.SIN:
            return np.sin(child)
        if expr.op is UnaryOp.SQRT:
            return np.sqrt(child)
        return -child
    left = _evaluate(expr.left, inputs)
    right = _evaluate(expr.right, inputs)
    if expr.op is BinaryOp.ADD:
        return left + right
    if expr.op is BinaryOp.SUB:
        return left - right
    if expr.op is BinaryOp.MUL:
        return left * right
    return left / right


def swap_variables(expr: Expression, mapping) -> Expression:
    """
    Rename variables according to ``mapping`` (old index -> new index).
    """
    if isinstance(expr, Variable):
        return Variable(mapping.get(expr.index, expr.index))
    if isinstance(expr, Unary):
        return Unary(expr.op, swap_variables(expr.child, mapping))
    if isinstance(expr, Binary):
        return Binary(expr.op, swap_variables(expr.left, mapping), swap_variables(expr.right, mapping))
    return expr
