"""Expression-dataset pairs.

A pair is drawn by inserting constants into a base expression once,
canonicalizing the result (without stripping) and then trying up to
``retries`` input datasets until every target is finite and storable. Inputs
are rounded to 32-bit floats before evaluation, so a pair written to a shard
re-evaluates to its float64 targets exactly from the stored inputs.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import logging
from dataclasses import dataclass
from typing import Optional, Union

# third-party imports
import numpy as np

# symscale
from symscale.config.pipeline import DataConfig
from symscale.data.constants import insert_constants
from symscale.data.mixtures import sample_input_dataset
from symscale.exceptions import CanonicalizationError, SequenceLengthError, VocabularyError
from symscale.expressions.canonical import CanonicalForm, canonicalize
from symscale.expressions.printing import to_latex
from symscale.expressions.tree import Expression, evaluate_batch
from symscale.tokens.latex_tokens import encode_expression
from symscale.tokens.values import is_representable
from symscale.tokens.vocabulary import Vocabulary, build_vocabulary


LOGGER: logging.Logger = logging.getLogger(__name__)

SPLIT_TAGS = {'train': 0, 'validation': 1, 'test': 2}

FLOAT32_MAX: float = float(np.finfo(np.float32).max)
FLOAT32_TINY: float = float(np.finfo(np.float32).tiny)


@dataclass
class ExprDatasetPair:
    expression: CanonicalForm
    inputs: np.ndarray
    targets: np.ndarray
    seed: int
    expression_id: Optional[int] = None

    @property
    def n_points(self) -> int:
        return self.inputs.shape[0]

    @property
    def n_vars(self) -> int:
        return self.inputs.shape[1]

    @property
    def latex(self) -> str:
        return to_latex(self.expression.expression)

    def triple_key(self) -> tuple:
        """
        Identity of the (expression, constants, dataset) triple.
        """
        return (self.expression.string,
                np.asarray(self.inputs, dtype='<f4').tobytes(),
                np.asarray(self.targets, dtype='<f4').tobytes())


@dataclass(frozen=True)
class Rejection:
    reason: str
    attempts: int = 0


def pair_seed(seed: int, split: str, expression_id: int, pair_index: int) -> int:
    """
    64-bit seed of one pair draw, derived from the global seed, the split,
    the base expression and the pair index.
    """
    sequence = np.random.SeedSequence((seed, SPLIT_TAGS[split], expression_id, pair_index))
    return int(sequence.generate_state(1, dtype=np.uint64)[0])


def targets_storable(targets: np.ndarray) -> bool:
    """
    True iff every target is finite, tokenizer-representable and survives a
    float32 round trip (zero or a normal float32 magnitude).
    """
    magnitude = np.abs(targets)
    with np.errstate(invalid='ignore'):
        in_float32 = (magnitude == 0) | ((magnitude >= FLOAT32_TINY) & (magnitude <= FLOAT32_MAX))
    return bool(np.all(is_representable(targets) & in_float32))


def sample_pair(
    base: Expression,
    config: DataConfig,
    rng: np.random.Generator,
    seed: int = 0,
    expression_id: Optional[int] = None,
    vocabulary: Optional[Vocabulary] = None,
) -> Union[ExprDatasetPair, Rejection]:
    """
    Draw one expression-dataset pair from a base expression.

    Args:
        base (Expression):
            A member of E.
        config (DataConfig):
            Constant probability and range, points per dataset, cluster
            limit, retry count, node cap and output length limit.
        rng (np.random.Generator):
        seed (int=0):
            Recorded on the pair.
        expression_id (int=None):
        vocabulary (Vocabulary=None):
            Used for the output length check; built from ``config`` if None.

    Returns:
        The first successful pair, or a ``Rejection`` naming the reason.
    """
    instantiated = insert_constants(base, config.constant_probability, config.constant_range, rng)
    try:
        form = canonicalize(instantiated, strip=False, node_cap=config.node_cap)
    except CanonicalizationError as error:
        LOGGER.debug('instantiation dropped: %s', error)
        return Rejection('canonicalization')
    if form.is_constant:
        return Rejection('constant')
    vocabulary = vocabulary or build_vocabulary(config.n_vars)
    try:
        encode_expression(to_latex(form.expression), vocabulary, config.max_output_length)
    except (SequenceLengthError, VocabularyError) as error:
        LOGGER.debug('instantiation dropped: %s', error)
        return Rejection('length')
    for attempt in range(1, config.retries + 1):
        inputs = sample_input_dataset(config.n_points, config.n_vars, config.max_clusters, rng)
        inputs = inputs.astype(np.float32).astype(np.float64)
        targets = evaluate_batch(form.expression, inputs)
        if targets_storable(targets):
            return ExprDatasetPair(form, inputs, targets, seed, expression_id)
    return Rejection('targets', config.retries)
