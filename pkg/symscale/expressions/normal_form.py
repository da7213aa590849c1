"""Polynomial normal form used by canonicalization.

An expression is converted into a sum of monomials with rational coefficients.
A monomial is a sorted product of atoms raised to non-zero integer powers.
Atoms are variables, function applications (exp, sin, sqrt) over a normal-form
argument, and primitive multi-term sums, which only ever appear with negative
powers (denominators). The conversion is a fixed rule pipeline:

    1. products are expanded over sums,
    2. rational constants fold, ``neg`` becomes a -1 coefficient,
    3. like monomials are collected and zero coefficients removed,
    4. exp atoms merge (exp(a)·exp(b) = exp(a+b), exp(0) = 1),
    5. sin is odd-canonical (sin(-u) = -sin(u), sin(0) = 0),
    6. sqrt folds rational perfect squares (sqrt(0) = 0),
    7. a multi-term divisor is split into content, monomial factor and a
       primitive sum; equal primitive parts cancel,
    8. terms are sorted by a strict total order with the constant term last.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Dict, List, Optional, Tuple, Union

# symscale
from symscale.exceptions import CanonicalizationError, CapExceededError
from symscale.expressions.tree import Binary, BinaryOp, Expression, IntConstant, Unary, UnaryOp, Variable


DEFAULT_NODE_CAP: int = 512

_FUNCTION_RANK: Dict[UnaryOp, int] = {UnaryOp.EXP: 0, UnaryOp.SIN: 1, UnaryOp.SQRT: 2}


@dataclass(frozen=True)
class VarAtom:
    index: int

    @property
    def key(self) -> tuple:
        return 0, self.index

    @property
    def size(self) -> int:
        return 1

    @property
    def has_variables(self) -> bool:
        return True


@dataclass(frozen=True)
class FuncAtom:
    op: UnaryOp
    arg: 'Polynomial'

    @property
    def key(self) -> tuple:
        return 1, _FUNCTION_RANK[self.op], self.arg.key

    @property
    def size(self) -> int:
        return 1 + self.arg.size

    @property
    def has_variables(self) -> bool:
        return self.arg.has_variables


@dataclass(frozen=True)
class SumAtom:
    poly: 'Polynomial'

    @property
    def key(self) -> tuple:
        return 2, self.poly.key

    @property
    def size(self) -> int:
        return self.poly.size

    @property
    def has_variables(self) -> bool:
        return self.poly.has_variables


Atom = Union[VarAtom, FuncAtom, SumAtom]
Monomial = Tuple[Tuple[Atom, int], ...]

ONE: Monomial = ()


def monomial_key(monomial: Monomial) -> tuple:
    if not monomial:
        return (1,)
    return 0, tuple((atom.key, power) for atom, power in monomial)


def _monomial_size(monomial: Monomial, coefficient: Fraction) -> int:
    factors = sum(abs(power) for _, power in monomial)
    size = sum(atom.size * abs(power) for atom, power in monomial)
    if coefficient.numerator not in (1, -1) or not monomial:
        size += 1
        factors += 1
    if coefficient.denominator != 1:
        size += 1
        factors += 1
    return size + max(factors - 1, 0)


def _make_monomial(factors: Dict[Atom, int]) -> Monomial:
    items = [(atom, power) for atom, power in factors.items() if power != 0]
    items.sort(key=lambda item: item[0].key)
    return tuple(items)


class Polynomial:
    """
    Immutable sum of monomials with rational coefficients.
    """

    __slots__ = ('terms', '_key', '_size')

    def __init__(self, terms: Dict[Monomial, Fraction]) -> None:
        items = [(monomial, Fraction(c)) for monomial, c in terms.items() if c != 0]
        items.sort(key=lambda item: monomial_key(item[0]))
        self.terms: Tuple[Tuple[Monomial, Fraction], ...] = tuple(items)
        self._key: Optional[tuple] = None
        self._size: Optional[int] = None

    @classmethod
    def constant(cls, value) -> 'Polynomial':
        return cls({ONE: Fraction(value)})

    @classmethod
    def atom(cls, atom: Atom, power: int = 1) -> 'Polynomial':
        return cls({((atom, power),): Fraction(1)})

    @property
    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple((monomial_key(m), c) for m, c in self.terms)
        return self._key

    @property
    def size(self) -> int:
        if self._size is None:
            if not self.terms:
                self._size = 1
            else:
                self._size = sum(_monomial_size(m, c) for m, c in self.terms) + len(self.terms) - 1
        return self._size

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_constant(self) -> bool:
        return all(not m for m, _ in self.terms)

    @property
    def constant_value(self) -> Fraction:
        if not self.is_constant:
            raise ValueError('polynomial is not constant')
        return self.terms[0][1] if self.terms else Fraction(0)

    @property
    def has_variables(self) -> bool:
        return any(_monomial_has_variables(m) for m, _ in self.terms)

    @property
    def leading_coefficient(self) -> Fraction:
        return self.terms[0][1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        return f'Polynomial({self.terms!r})'


ZERO = Polynomial({})


def _monomial_has_variables(monomial: Monomial) -> bool:
    return any(atom.has_variables for atom, _ in monomial)


def _check_cap(poly: Polynomial, cap: int) -> Polynomial:
    if poly.size > cap:
        raise CapExceededError(poly.size, cap)
    return poly


def add(p: Polynomial, q: Polynomial) -> Polynomial:
    terms: Dict[Monomial, Fraction] = dict(p.terms)
    for monomial, c in q.terms:
        terms[monomial] = terms.get(monomial, Fraction(0)) + c
    return Polynomial(terms)


def scale(p: Polynomial, factor) -> Polynomial:
    factor = Fraction(factor)
    return Polynomial({m: c * factor for m, c in p.terms})


def _multiply_monomials(m1: Monomial, m2: Monomial, cap: int) -> Monomial:
    factors: Dict[Atom, int] = {}
    exp_args: List[Polynomial] = []
    for atom, power in m1 + m2:
        if isinstance(atom, FuncAtom) and atom.op is UnaryOp.EXP:
            exp_args.append(scale(atom.arg, power))
        else:
            factors[atom] = factors.get(atom, 0) + power
    if exp_args:
        merged = exp_args[0]
        for arg in exp_args[1:]:
            merged = add(merged, arg)
        if not merged.is_zero:
            _check_cap(merged, cap)
            factors[FuncAtom(UnaryOp.EXP, merged)] = 1
    return _make_monomial(factors)


def multiply(p: Polynomial, q: Polynomial, cap: int = DEFAULT_NODE_CAP) -> Polynomial:
    terms: Dict[Monomial, Fraction] = {}
    for m1, c1 in p.terms:
        for m2, c2 in q.terms:
            monomial = _multiply_monomials(m1, m2, cap) if m1 and m2 else (m1 or m2)
            terms[monomial] = terms.get(monomial, Fraction(0)) + c1 * c2
    return _check_cap(Polynomial(terms), cap)


def _power(p: Polynomial, k: int, cap: int) -> Polynomial:
    result = Polynomial.constant(1)
    for _ in range(k):
        result = multiply(result, p, cap)
    return result


def invert_monomial(monomial: Monomial, coefficient: Fraction, cap: int = DEFAULT_NODE_CAP) -> Polynomial:
    if coefficient == 0:
        raise CanonicalizationError('division by zero')
    factors: Dict[Atom, int] = {}
    expand: List[Tuple[Polynomial, int]] = []
    for atom, power in monomial:
        if isinstance(atom, FuncAtom) and atom.op is UnaryOp.EXP:
            factors[FuncAtom(UnaryOp.EXP, scale(atom.arg, -1))] = 1
        elif isinstance(atom, SumAtom):
            expand.append((atom.poly, -power))
        else:
            factors[atom] = -power
    result = Polynomial({_make_monomial(factors): 1 / Fraction(coefficient)})
    for poly, k in expand:
        result = multiply(result, _power(poly, k, cap), cap)
    return result


@dataclass(frozen=True)
class Factorization:
    """
    p = content · monomial · primitive
    """
    content: Fraction
    monomial: Monomial
    primitive: Polynomial


def factor(p: Polynomial) -> Factorization:
    """
    Split a polynomial into signed rational content, common monomial factor
    and a primitive part whose leading coefficient is a positive integer and
    whose integer coefficients are coprime.
    """
    if p.is_zero:
        raise CanonicalizationError('cannot factor the zero polynomial')
    common: Dict[Atom, int] = {}
    atoms = {atom for m, _ in p.terms for atom, _ in m}
    for atom in atoms:
        powers = [dict(m).get(atom, 0) for m, _ in p.terms]
        if isinstance(atom, FuncAtom) and atom.op is UnaryOp.EXP:
            low = 1 if all(power == 1 for power in powers) else 0
        elif isinstance(atom, SumAtom):
            low = 0
        else:
            low = min(powers)
        if low:
            common[atom] = low
    reduced: Dict[Monomial, Fraction] = {}
    for m, c in p.terms:
        factors = dict(m)
        for atom, power in common.items():
            factors[atom] = factors.get(atom, 0) - power
        reduced[_make_monomial(factors)] = c
    remainder = Polynomial(reduced)
    content = signed_content(remainder)
    primitive = scale(remainder, 1 / content)
    return Factorization(content=content, monomial=_make_monomial(common), primitive=primitive)


def signed_content(p: Polynomial) -> Fraction:
    """
    gcd of numerators over lcm of denominators, carrying the leading sign.
    """
    numerator = 0
    denominator = 1
    for _, c in p.terms:
        numerator = gcd(numerator, c.numerator)
        denominator = denominator * c.denominator // gcd(denominator, c.denominator)
    content = Fraction(numerator, denominator)
    return content if p.leading_coefficient > 0 else -content


def inverse(p: Polynomial, cap: int = DEFAULT_NODE_CAP) -> Polynomial:
    if p.is_zero:
        raise CanonicalizationError('division by zero')
    if len(p.terms) == 1:
        monomial, coefficient = p.terms[0]
        return invert_monomial(monomial, coefficient, cap)
    parts = factor(p)
    denominator = Polynomial.atom(SumAtom(parts.primitive), -1)
    return multiply(invert_monomial(parts.monomial, parts.content, cap), denominator, cap)


def divide(p: Polynomial, q: Polynomial, cap: int = DEFAULT_NODE_CAP) -> Polynomial:
    if q.is_zero:
        raise CanonicalizationError('division by zero')
    if len(p.terms) > 1 and len(q.terms) > 1:
        top = factor(p)
        bottom = factor(q)
        if top.primitive == bottom.primitive:
            numerator = Polynomial({top.monomial: top.content / bottom.content})
            return multiply(numerator, invert_monomial(bottom.monomial, Fraction(1), cap), cap)
    return multiply(p, inverse(q, cap), cap)


def apply_exp(u: Polynomial) -> Polynomial:
    if u.is_zero:
        return Polynomial.constant(1)
    return Polynomial.atom(FuncAtom(UnaryOp.EXP, u))


def apply_sin(u: Polynomial) -> Polynomial:
    if u.is_zero:
        return ZERO
    if u.leading_coefficient < 0:
        return scale(Polynomial.atom(FuncAtom(UnaryOp.SIN, scale(u, -1))), -1)
    return Polynomial.atom(FuncAtom(UnaryOp.SIN, u))


def _rational_sqrt(value: Fraction) -> Optional[Fraction]:
    if value < 0:
        return None
    top, bottom = isqrt(value.numerator), isqrt(value.denominator)
    if top * top == value.numerator and bottom * bottom == value.denominator:
        return Fraction(top, bottom)
    return None


def apply_sqrt(u: Polynomial) -> Polynomial:
    if u.is_zero:
        return ZERO
    if u.is_constant:
        root = _rational_sqrt(u.constant_value)
        if root is not None:
            return Polynomial.constant(root)
    return Polynomial.atom(FuncAtom(UnaryOp.SQRT, u))


def from_expression(expr: Expression, cap: int = DEFAULT_NODE_CAP) -> Polynomial:
    if isinstance(expr, Variable):
        return Polynomial.atom(VarAtom(expr.index))
    if isinstance(expr, IntConstant):
        return Polynomial.constant(expr.value)
    if isinstance(expr, Unary):
        child = from_expression(expr.child, cap)
        if expr.op is UnaryOp.NEG:
            return scale(child, -1)
        if expr.op is UnaryOp.EXP:
            return apply_exp(child)
        if expr.op is UnaryOp.SIN:
            return apply_sin(child)
        return apply_sqrt(child)
    left = from_expression(expr.left, cap)
    right = from_expression(expr.right, cap)
    if expr.op is BinaryOp.ADD:
        return _check_cap(add(left, right), cap)
    if expr.op is BinaryOp.SUB:
        return _check_cap(add(left, scale(right, -1)), cap)
    if expr.op is BinaryOp.MUL:
        return multiply(left, right, cap)
    return divide(left, right, cap)


def strip_offset_and_content(p: Polynomial) -> Polynomial:
    """
    Remove variable-free terms and divide by the signed content. Polynomials
    without variable terms are returned unchanged.
    """
    kept = {m: c for m, c in p.terms if _monomial_has_variables(m)}
    if not kept:
        return p
    remainder = Polynomial(kept)
    return scale(remainder, 1 / signed_content(remainder))


# -----------------------------------------------------------------------------
# Rendering back to an operator tree
# -----------------------------------------------------------------------------


def _fold(op: BinaryOp, nodes: List[Expression]) -> Expression:
    result = nodes[0]
    for node in nodes[1:]:
        result = Binary(op, result, node)
    return result


def _atom_to_tree(atom: Atom) -> Expression:
    if isinstance(atom, VarAtom):
        return Variable(atom.index)
    if isinstance(atom, FuncAtom):
        return Unary(atom.op, to_tree(atom.arg))
    return to_tree(atom.poly)


def _term_to_tree(monomial: Monomial, coefficient: Fraction) -> Expression:
    numerator: List[Expression] = []
    denominator: List[Expression] = []
    sums: List[Tuple[Atom, int]] = []
    positive = [(atom, power) for atom, power in monomial if power > 0]
    if coefficient.numerator != 1 or not positive:
        numerator.append(IntConstant(coefficient.numerator))
    if coefficient.denominator != 1:
        denominator.append(IntConstant(coefficient.denominator))
    for atom, power in monomial:
        if power > 0:
            numerator.extend([_atom_to_tree(atom)] * power)
        elif isinstance(atom, SumAtom):
            sums.append((atom, -power))
        else:
            denominator.extend([_atom_to_tree(atom)] * -power)
    node = _fold(BinaryOp.MUL, numerator)
    if denominator:
        node = Binary(BinaryOp.DIV, node, _fold(BinaryOp.MUL, denominator))
    for atom, power in sums:
        divisor = _atom_to_tree(atom)
        for _ in range(power):
            node = Binary(BinaryOp.DIV, node, divisor)
    return node


def to_tree(p: Polynomial) -> Expression:
    """
    Render a normal form as a tree that converts back to the same normal form.
    """
    if p.is_zero:
        return IntConstant(0)
    node: Optional[Expression] = None
    for monomial, coefficient in p.terms:
        term = _term_to_tree(monomial, abs(coefficient))
        if node is None:
            node = Unary(UnaryOp.NEG, term) if coefficient < 0 else term
        else:
            node = Binary(BinaryOp.SUB if coefficient < 0 else BinaryOp.ADD, node, term)
    return node
