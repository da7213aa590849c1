__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


from unittest import TestCase

from symscale.exceptions import ExpressionParseError, SequenceLengthError, VocabularyError
from symscale.expressions.canonical import canonicalize
from symscale.expressions.parsing import parse_expression
from symscale.expressions.printing import to_latex
from symscale.expressions.tree import node_count
from symscale.tokens.latex_tokens import decode_expression, encode_expression, split_latex
from symscale.tokens.vocabulary import build_vocabulary


VOCABULARY = build_vocabulary(2)


def ids(*tokens):
    return [VOCABULARY.id_of(token) for token in tokens]


class TestLatexTokens(TestCase):

    def test_split(self):
        self.assertEqual(['\\frac', '{', 'x_{1}', '}', '{', '1', '2', '}'], split_latex('\\frac{x_{1}}{12}'))
        self.assertEqual(['\\sqrt', '{', 'x_{2}', '}', '^', '{', '2', '}'], split_latex('\\sqrt{x_{2}}^{2}'))
        with self.assertRaises(VocabularyError):
            split_latex('\\cos(x_{1})')

    def test_encode_frames_sequence(self):
        encoded = encode_expression('x_{1} + 7', VOCABULARY)
        self.assertEqual([VOCABULARY.bos_id] + ids('x_{1}', '+', '7') + [VOCABULARY.eos_id], encoded)

    def test_encode_limits(self):
        with self.assertRaises(SequenceLengthError):
            encode_expression('x_{1} + x_{2}', VOCABULARY, max_length=4)
        with self.assertRaises(VocabularyError):
            encode_expression('x_{3}', VOCABULARY)

    def test_canonical_forms_decode_back(self):
        for text in ('x1/x2^2', '-3*x1 + sin(x2)', 'sqrt(x1 + 1)*exp(x2)', '(x1 + x2)/(x1 - 2)', '12*x1^3 - 45',
                     'exp(sin(x1)/x2)'):
            form = canonicalize(parse_expression(text), strip=False)
            decoded = decode_expression(encode_expression(to_latex(form.expression), VOCABULARY), VOCABULARY)
            self.assertEqual(form.string, canonicalize(decoded, strip=False).string, text)

    def test_padding_after_eos_ignored(self):
        sequence = ids('<bos>', 'x_{1}', '<eos>', '<pad>', '<pad>')
        self.assertEqual(parse_expression('x1'), decode_expression(sequence, VOCABULARY))

    def test_malformed(self):
        for tokens in (('x_{1}', '+'), ('x_{1}', '+', '<eos>'), ('\\frac', '{', 'x_{1}', '}', '<eos>'),
                       ('x_{1}', '<pad>', '<eos>'), ('(', 'x_{1}', '<eos>'), ('<eos>',),
                       ('x_{1}', '^', '2', '<eos>')):
            with self.assertRaises(ExpressionParseError, msg=str(tokens)):
                decode_expression(ids(*tokens), VOCABULARY)
        with self.assertRaises(ExpressionParseError):
            decode_expression([99, VOCABULARY.eos_id], VOCABULARY)

    def test_deep_nesting_is_a_parse_error(self):
        for opener in (('(',), ('\\sqrt', '{'), ('\\sin', '(')):
            sequence = [VOCABULARY.bos_id] + ids(*opener) * (254 // len(opener)) + [VOCABULARY.eos_id]
            with self.assertRaises(ExpressionParseError, msg=str(opener)):
                decode_expression(sequence, VOCABULARY)

    def test_nested_powers_are_bounded(self):
        power = (')', '^', '{', '6', '4', '}')
        sequence = ids(*(['('] * 30 + ['x_{1}'] + list(power) * 30 + ['<eos>']))
        with self.assertRaises(ExpressionParseError):
            decode_expression(sequence, VOCABULARY)
        self.assertEqual(127, node_count(decode_expression(ids('(', 'x_{1}', *power, '<eos>'), VOCABULARY)))
