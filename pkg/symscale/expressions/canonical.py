"""Canonical forms and symbolic equality.

``canonicalize`` converts a tree to its polynomial normal form, optionally
strips the top-level numeric offset and content (``c·f + d -> f``), renders
the result back into a tree built from the tree operators only, and pairs it
with its canonical string. Rendering is chosen so that canonicalization is
idempotent.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import logging
from dataclasses import dataclass, field

# symscale
from symscale.exceptions import CanonicalizationError, CapExceededError
from symscale.expressions import normal_form
from symscale.expressions.normal_form import DEFAULT_NODE_CAP, Polynomial
from symscale.expressions.parsing import parse_expression
from symscale.expressions.printing import format_expression
from symscale.expressions.tree import Expression, depth, node_count, variables


LOGGER: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CanonicalForm:
    """
    A fixed point of ``canonicalize`` together with its canonical string.
    Equality and hashing use the string only.
    """
    string: str
    expression: Expression = field(compare=False, repr=False)

    @property
    def is_constant(self) -> bool:
        return not variables(self.expression)

    @property
    def depth(self) -> int:
        return depth(self.expression)

    @property
    def n_nodes(self) -> int:
        return node_count(self.expression)

    @classmethod
    def from_string(cls, text: str) -> 'CanonicalForm':
        """
        Rebuild a canonical form from its serialized string without
        re-canonicalizing.
        """
        return cls(string=text, expression=normal_form.to_tree(
            normal_form.from_expression(parse_expression(text), cap=10 ** 9)))


def to_normal_form(expr: Expression, strip: bool = True, node_cap: int = DEFAULT_NODE_CAP) -> Polynomial:
    poly = normal_form.from_expression(expr, node_cap)
    if strip:
        poly = normal_form.strip_offset_and_content(poly)
    return poly


def canonicalize(expr: Expression, strip: bool = True, node_cap: int = DEFAULT_NODE_CAP) -> CanonicalForm:
    """
    Bring an expression into canonical form.

    Args:
        expr (Expression):
            Any well-formed tree.
        strip (bool=True):
            Drop the top-level numeric offset and divide by the numeric
            content. Used for base expressions only; constant-instantiated
            expressions are canonicalized with ``strip=False``.
        node_cap (int=512):
            Maximum size of the expanded form.

    Returns:
        CanonicalForm

    Raises:
        CapExceededError:
            Raised if expansion grows past ``node_cap`` nodes.
        CanonicalizationError:
            Raised on division by a constant zero.
    """
    poly = to_normal_form(expr, strip=strip, node_cap=node_cap)
    tree = normal_form.to_tree(poly)
    size = node_count(tree)
    if size > node_cap:
        raise CapExceededError(size, node_cap)
    return CanonicalForm(string=format_expression(tree), expression=tree)


def symbolic_equal(a: Expression, b: Expression, strip: bool = True, node_cap: int = DEFAULT_NODE_CAP) -> bool:
    """
    True iff both expressions have the same canonical string. Expressions that
    cannot be canonicalized are not comparable and count as unequal.
    """
    try:
        return canonicalize(a, strip, node_cap).string == canonicalize(b, strip, node_cap).string
    except CanonicalizationError as error:
        LOGGER.debug('expressions not comparable: %s', error)
        return False
