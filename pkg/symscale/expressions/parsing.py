"""Recursive-descent parsing of printed expressions.

Both printed forms share one grammar shape::

    expr    := ['-'] term (('+' | '-') term)*
    term    := factor ((MUL | DIV) factor)*
    factor  := primary [POWER]
    primary := VARIABLE | INTEGER | FUNCTION '(' expr ')' | SQRT ... | FRAC ... | '(' expr ')'

Concrete grammars define the lexer and the token spellings. Integer powers are
expanded into repeated multiplication so the parsed tree uses only the eight
tree operators.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from abc import ABC, abstractmethod
from typing import Dict, List, Optional, Sequence

# third-party imports
import regex

# symscale
from symscale.exceptions import ExpressionParseError
from symscale.expressions.tree import Binary, BinaryOp, Expression, IntConstant, Unary, UnaryOp, Variable, node_count


MAX_POWER: int = 64
MAX_NESTING: int = 48
MAX_EXPANDED_NODES: int = 4096


class ExpressionGrammar(ABC):
    """
    Parser over a token list. A fresh instance is used for each parse.
    """

    _NAME: str = NotImplemented
    MUL_TOKENS: Sequence[str] = ()
    DIV_TOKEN: Optional[str] = None
    FUNCTION_TOKENS: Dict[str, UnaryOp] = {}

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if cls._NAME is NotImplemented:
            raise NotImplementedError('Class attribute `_NAME` not implemented.')

    def __init__(self, tokens: Sequence[str]) -> None:
        self.tokens: List[str] = list(tokens)
        self.position: int = 0
        self.nesting: int = 0

    # --- hooks --------------------------------------------------------------

    @abstractmethod
    def variable_index(self, token: str) -> Optional[int]:
        """
        Return the variable index for a variable token, else None.
        """
        raise NotImplementedError

    @abstractmethod
    def parse_integer(self) -> Optional[int]:
        """
        Consume an integer literal if one starts at the cursor.
        """
        raise NotImplementedError

    @abstractmethod
    def parse_power(self) -> Optional[int]:
        """
        Consume a power suffix if one starts at the cursor.
        """
        raise NotImplementedError

    def parse_special(self) -> Optional[Expression]:
        """
        Grammar-specific primaries (sqrt, frac).
        """
        return None

    # --- cursor helpers -----------------------------------------------------

    def peek(self) -> Optional[str]:
        return self.tokens[self.position] if self.position < len(self.tokens) else None

    def advance(self) -> str:
        token = self.peek()
        if token is None:
            raise ExpressionParseError(f'unexpected end of input in {self._NAME} expression')
        self.position += 1
        return token

    def expect(self, token: str) -> None:
        found = self.peek()
        if found != token:
            raise ExpressionParseError(
                f'expected {token!r} at position {self.position}, found {found!r}')
        self.position += 1

    # --- grammar ------------------------------------------------------------

    def parse(self) -> Expression:
        if not self.tokens:
            raise ExpressionParseError('empty expression')
        node = self.parse_expr()
        if self.peek() is not None:
            raise ExpressionParseError(
                f'unexpected token {self.peek()!r} at position {self.position}')
        return node

    def parse_expr(self) -> Expression:
        if self.nesting >= MAX_NESTING:
            raise ExpressionParseError(f'brackets nested deeper than {MAX_NESTING}')
        self.nesting += 1
        try:
            return self._parse_sum()
        finally:
            self.nesting -= 1

    def _parse_sum(self) -> Expression:
        if self.peek() == '-':
            self.advance()
            node: Expression = Unary(UnaryOp.NEG, self.parse_term())
        else:
            node = self.parse_term()
        while self.peek() in ('+', '-'):
            op = BinaryOp.ADD if self.advance() == '+' else BinaryOp.SUB
            node = Binary(op, node, self.parse_term())
        return node

    def parse_term(self) -> Expression:
        node = self.parse_factor()
        while True:
            token = self.peek()
            if token is not None and token in self.MUL_TOKENS:
                self.advance()
                node = Binary(BinaryOp.MUL, node, self.parse_factor())
            elif token is not None and token == self.DIV_TOKEN:
                self.advance()
                node = Binary(BinaryOp.DIV, node, self.parse_factor())
            else:
                return node

    def parse_factor(self) -> Expression:
        base = self.parse_primary()
        exponent = self.parse_power()
        if exponent is None:
            return base
        if not 1 <= exponent <= MAX_POWER:
            raise ExpressionParseError(f'power {exponent} outside [1, {MAX_POWER}]')
        if node_count(base) * exponent > MAX_EXPANDED_NODES:
            raise ExpressionParseError(f'power {exponent} expands past {MAX_EXPANDED_NODES} nodes')
        node = base
        for _ in range(exponent - 1):
            node = Binary(BinaryOp.MUL, node, base)
        return node

    def parse_primary(self) -> Expression:
        token = self.peek()
        if token is None:
            raise ExpressionParseError('dangling operator at end of input')
        index = self.variable_index(token)
        if index is not None:
            self.advance()
            return Variable(index)
        value = self.parse_integer()
        if value is not None:
            return IntConstant(value)
        if token in self.FUNCTION_TOKENS:
            self.advance()
            self.expect('(')
            argument = self.parse_expr()
            self.expect(')')
            return Unary(self.FUNCTION_TOKENS[token], argument)
        special = self.parse_special()
        if special is not None:
            return special
        if token == '(':
            self.advance()
            node = self.parse_expr()
            self.expect(')')
            return node
        raise ExpressionParseError(f'unexpected token {token!r} at position {self.position}')


_ASCII_LEXER = regex.compile(r'\s*(?:(x\d+)|(\d+)|(sqrt|sin|exp)|([-+*/^()]))')


class AsciiGrammar(ExpressionGrammar):
    """
    Grammar of canonical strings, documented in ``expr-grammar.md``.
    """
    _NAME = 'canonical'
    MUL_TOKENS = ('*',)
    DIV_TOKEN = '/'
    FUNCTION_TOKENS = {'exp': UnaryOp.EXP, 'sin': UnaryOp.SIN, 'sqrt': UnaryOp.SQRT}

    @staticmethod
    def tokenize(text: str) -> List[str]:
        tokens: List[str] = []
        position = 0
        stripped = text.rstrip()
        while position < len(stripped):
            match = _ASCII_LEXER.match(stripped, position)
            if match is None:
                raise ExpressionParseError(f'cannot read {stripped[position:]!r}')
            tokens.append(match.group(match.lastindex))
            position = match.end()
        return tokens

    def variable_index(self, token: str) -> Optional[int]:
        if token.startswith('x') and token[1:].isdigit():
            index = int(token[1:])
            if index < 1:
                raise ExpressionParseError(f'invalid variable {token!r}')
            return index
        return None

    def parse_integer(self) -> Optional[int]:
        token = self.peek()
        if token is not None and token.isdigit():
            self.advance()
            return int(token)
        return None

    def parse_power(self) -> Optional[int]:
        if self.peek() != '^':
            return None
        self.advance()
        value = self.parse_integer()
        if value is None:
            raise ExpressionParseError('expected an integer power after "^"')
        return value


def parse_expression(text: str) -> Expression:
    """
    Parse a canonical string back into an expression tree.
    """
    return AsciiGrammar(AsciiGrammar.tokenize(text)).parse()
