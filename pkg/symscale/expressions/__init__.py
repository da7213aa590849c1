__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


from symscale.expressions.tree import (
    BINARY_OPS, UNARY_OPS, Binary, BinaryOp, Expression, IntConstant, Unary, UnaryOp, Variable,
    depth, evaluate, evaluate_batch, node_count, variables,
)
from symscale.expressions.canonical import CanonicalForm, canonicalize, symbolic_equal
from symscale.expressions.parsing import parse_expression
from symscale.expressions.printing import format_expression, to_latex
