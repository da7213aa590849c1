"""Output token vocabulary.

The vocabulary is the minimal closure of the LaTeX printer's output: three
special tokens, the ten digits, one token per variable and the operator and
bracket tokens. Ids are positions in the ordered token list; the list is
serialized as ``vocabulary.json`` and its sha256 digest is stored in
checkpoints.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import json
from hashlib import sha256
from pathlib import Path
from typing import Dict, List, Sequence, Union

# symscale
from symscale.exceptions import VocabularyError


VOCABULARY_VERSION: int = 1

PAD: str = '<pad>'
BOS: str = '<bos>'
EOS: str = '<eos>'
SPECIAL_TOKENS = (PAD, BOS, EOS)
DIGIT_TOKENS = tuple(str(digit) for digit in range(10))
OPERATOR_TOKENS = ('+', '-', '\\frac', '\\sqrt', '\\sin', '\\exp', '^', '{', '}', '(', ')', '\\cdot')


def variable_token(index: int) -> str:
    return f'x_{{{index}}}'


class Vocabulary:
    def __init__(self, tokens: Sequence[str]) -> None:
        tokens = list(tokens)
        if len(set(tokens)) != len(tokens):
            raise VocabularyError('duplicate tokens in vocabulary')
        if tuple(tokens[:3]) != SPECIAL_TOKENS:
            raise VocabularyError(f'vocabulary must start with {SPECIAL_TOKENS}')
        self.tokens: List[str] = tokens
        self.token_to_id: Dict[str, int] = {token: i for i, token in enumerate(tokens)}

    def __len__(self) -> int:
        return len(self.tokens)

    def __eq__(self, other) -> bool:
        return isinstance(other, Vocabulary) and self.tokens == other.tokens

    @property
    def pad_id(self) -> int:
        return self.token_to_id[PAD]

    @property
    def bos_id(self) -> int:
        return self.token_to_id[BOS]

    @property
    def eos_id(self) -> int:
        return self.token_to_id[EOS]

    @property
    def n_vars(self) -> int:
        return sum(1 for token in self.tokens if token.startswith('x_{'))

    def id_of(self, token: str) -> int:
        try:
            return self.token_to_id[token]
        except KeyError as key_error:
            raise VocabularyError(f'unknown token {token!r}') from key_error

    def token_of(self, token_id: int) -> str:
        if not 0 <= token_id < len(self.tokens):
            raise VocabularyError(f'unknown token id {token_id}')
        return self.tokens[token_id]

    def to_json(self) -> str:
        return json.dumps({'tokens': self.tokens, 'version': VOCABULARY_VERSION}, indent=2, sort_keys=True) + '\n'

    def digest(self) -> str:
        return sha256(self.to_json().encode('utf-8')).hexdigest()

    def save(self, path: Union[Path, str]) -> None:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(self.to_json())

    @classmethod
    def from_json(cls, text: str) -> 'Vocabulary':
        payload = json.loads(text)
        if payload.get('version') != VOCABULARY_VERSION:
            raise VocabularyError(f'unsupported vocabulary version {payload.get("version")!r}')
        return cls(payload['tokens'])

    @classmethod
    def load(cls, path: Union[Path, str]) -> 'Vocabulary':
        with open(path, 'r', encoding='utf-8') as f:
            return cls.from_json(f.read())


def build_vocabulary(n_vars: int = 2) -> Vocabulary:
    variables = tuple(variable_token(index) for index in range(1, n_vars + 1))
    return Vocabulary(SPECIAL_TOKENS + DIGIT_TOKENS + variables + OPERATOR_TOKENS)
