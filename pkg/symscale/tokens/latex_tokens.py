"""LaTeX token sequences for decoder targets.

``encode_expression`` splits a LaTeX string into vocabulary tokens (integers
digit by digit) and frames it with BOS/EOS. ``decode_expression`` runs the
LaTeX grammar (documented in ``latex-grammar.md``) over a token id sequence.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from typing import List, Optional, Sequence

# third-party imports
import regex

# symscale
from symscale.exceptions import ExpressionParseError, SequenceLengthError, VocabularyError
from symscale.expressions.parsing import ExpressionGrammar
from symscale.expressions.tree import Binary, BinaryOp, Expression, Unary, UnaryOp
from symscale.tokens.vocabulary import BOS, EOS, PAD, Vocabulary


MAX_OUTPUT_LENGTH: int = 256

_LATEX_LEXER = regex.compile(r'\s*(\\frac|\\sqrt|\\sin|\\exp|\\cdot|x_\{\d+\}|\d|[-+^{}()])')
_VARIABLE = regex.compile(r'x_\{(\d+)\}')


def split_latex(latex: str) -> List[str]:
    tokens: List[str] = []
    position = 0
    text = latex.rstrip()
    while position < len(text):
        match = _LATEX_LEXER.match(text, position)
        if match is None:
            raise VocabularyError(f'unknown symbol at {text[position:position + 12]!r}')
        tokens.append(match.group(1))
        position = match.end()
    return tokens


def encode_expression(latex: str, vocabulary: Vocabulary, max_length: int = MAX_OUTPUT_LENGTH) -> List[int]:
    """
    Args:
        latex (str):
            Output of ``to_latex``.
        vocabulary (Vocabulary):
        max_length (int=256):
            Maximum sequence length including BOS and EOS.

    Returns:
        Token ids: BOS, tokens, EOS.

    Raises:
        VocabularyError:
            Raised on a symbol outside the vocabulary.
        SequenceLengthError:
            Raised if the framed sequence is longer than ``max_length``.
    """
    ids = [vocabulary.bos_id] + [vocabulary.id_of(token) for token in split_latex(latex)] + [vocabulary.eos_id]
    if len(ids) > max_length:
        raise SequenceLengthError(f'sequence of {len(ids)} tokens exceeds {max_length}')
    return ids


class LatexGrammar(ExpressionGrammar):
    _NAME = 'latex'
    MUL_TOKENS = ('\\cdot',)
    DIV_TOKEN = None
    FUNCTION_TOKENS = {'\\exp': UnaryOp.EXP, '\\sin': UnaryOp.SIN}

    def variable_index(self, token: str) -> Optional[int]:
        match = _VARIABLE.fullmatch(token)
        if match is None:
            return None
        return int(match.group(1))

    def parse_integer(self) -> Optional[int]:
        digits: List[str] = []
        while self.peek() is not None and len(self.peek()) == 1 and self.peek().isdigit():
            digits.append(self.advance())
        return int(''.join(digits)) if digits else None

    def parse_power(self) -> Optional[int]:
        if self.peek() != '^':
            return None
        self.advance()
        self.expect('{')
        value = self.parse_integer()
        if value is None:
            raise ExpressionParseError('expected an integer power inside "^{...}"')
        self.expect('}')
        return value

    def _braced(self) -> Expression:
        self.expect('{')
        node = self.parse_expr()
        self.expect('}')
        return node

    def parse_special(self) -> Optional[Expression]:
        token = self.peek()
        if token == '\\sqrt':
            self.advance()
            return Unary(UnaryOp.SQRT, self._braced())
        if token == '\\frac':
            self.advance()
            numerator = self._braced()
            denominator = self._braced()
            return Binary(BinaryOp.DIV, numerator, denominator)
        return None


def decode_expression(token_ids: Sequence[int], vocabulary: Vocabulary) -> Expression:
    """
    Parse a token id sequence (optionally starting with BOS) up to EOS.

    Raises:
        ExpressionParseError:
            Raised for malformed sequences: missing EOS, stray special tokens,
            unbalanced brackets, dangling operators or unknown ids.
    """
    tokens: List[str] = []
    ids = list(token_ids)
    if ids and ids[0] == vocabulary.bos_id:
        ids = ids[1:]
    terminated = False
    for token_id in ids:
        try:
            token = vocabulary.token_of(int(token_id))
        except VocabularyError as vocabulary_error:
            raise ExpressionParseError(str(vocabulary_error)) from vocabulary_error
        if token == EOS:
            terminated = True
            break
        if token in (PAD, BOS):
            raise ExpressionParseError(f'unexpected {token} inside expression')
        tokens.append(token)
    if not terminated:
        raise ExpressionParseError('sequence ended without EOS')
    return LatexGrammar(tokens).parse()
