__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


from symscale.tokens.values import CellCode, decode_value, encode_array, encode_value, is_representable
from symscale.tokens.vocabulary import Vocabulary, build_vocabulary
from symscale.tokens.latex_tokens import decode_expression, encode_expression, split_latex
