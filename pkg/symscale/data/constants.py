"""Constant insertion into base expressions.

Sites are the variable leaves and the exp/sin/sqrt nodes. Children are
processed before their parent, and each site draws two independent coins: a
multiplicative constant ``a`` (never 0 or 1) and an additive constant ``b``
(never 0). A site ``s`` becomes ``a*s``, ``s + b`` or ``a*s + b``.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from typing import Sequence, Tuple

# third-party imports
import numpy as np

# symscale
from symscale.expressions.tree import Binary, BinaryOp, Expression, IntConstant, Unary, UnaryOp, Variable


CONSTANT_SITES = (UnaryOp.EXP, UnaryOp.SIN, UnaryOp.SQRT)


def constant_choices(constant_range: Sequence[int]) -> Tuple[np.ndarray, np.ndarray]:
    """
    Return (multiplicative values, additive values) for an inclusive range.
    """
    low, high = constant_range
    values = np.arange(low, high + 1, dtype=np.int64)
    return values[(values != 0) & (values != 1)], values[values != 0]


def insert_constants(
    base: Expression,
    p: float,
    constant_range: Sequence[int] = (-9, 9),
    rng: np.random.Generator = None,
) -> Expression:
    """
    Wrap every site of ``base`` in random integer constants.

    Args:
        base (Expression):
            A canonical base expression.
        p (float):
            Probability of each coin, in [0, 1].
        constant_range (Sequence[int]=(-9, 9)):
            Inclusive bounds of the constants.
        rng (np.random.Generator):

    Returns:
        The instantiated tree (not canonicalized).
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError(f'p must lie in [0, 1], got {p}')
    if rng is None:
        rng = np.random.default_rng()
    multipliers, offsets = constant_choices(constant_range)

    def wrap(site: Expression) -> Expression:
        if rng.random() < p:
            site = Binary(BinaryOp.MUL, IntConstant(int(rng.choice(multipliers))), site)
        if rng.random() < p:
            site = Binary(BinaryOp.ADD, site, IntConstant(int(rng.choice(offsets))))
        return site

    def visit(node: Expression) -> Expression:
        if isinstance(node, Variable):
            return wrap(node)
        if isinstance(node, Unary):
            rebuilt = Unary(node.op, visit(node.child))
            return wrap(rebuilt) if node.op in CONSTANT_SITES else rebuilt
        if isinstance(node, Binary):
            return Binary(node.op, visit(node.left), visit(node.right))
        return node

    return visit(base)


def count_sites(expr: Expression) -> int:
    if isinstance(expr, Variable):
        return 1
    if isinstance(expr, Unary):
        return count_sites(expr.child) + (expr.op in CONSTANT_SITES)
    if isinstance(expr, Binary):
        return count_sites(expr.left) + count_sites(expr.right)
    return 0
