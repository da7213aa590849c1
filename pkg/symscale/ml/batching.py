"""Tensors from expression-dataset pairs, and the seeded batch stream.

The stream is the concatenation of per-epoch permutations of the training
pairs; epoch e uses the permutation seeded by (seed, e). A stream position is
therefore enough to resume it.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

# third-party imports
import numpy as np
import torch

# symscale
from symscale.data.pairs import ExprDatasetPair
from symscale.tokens.latex_tokens import MAX_OUTPUT_LENGTH, encode_expression
from symscale.tokens.values import encode_array
from symscale.tokens.vocabulary import Vocabulary


LOGGER: logging.Logger = logging.getLogger(__name__)


@dataclass
class CellGrid:
    """
    Mantissas and exponents of one dataset; columns are the input variables
    followed by the target.
    """
    mantissas: np.ndarray
    exponents: np.ndarray

    @classmethod
    def from_pair(cls, pair: ExprDatasetPair) -> 'CellGrid':
        cells = np.column_stack([pair.inputs, pair.targets])
        mantissas, exponents = encode_array(cells)
        return cls(mantissas.astype(np.float32), exponents)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.mantissas.shape

    def tensors(self) -> Tuple[torch.Tensor, torch.Tensor]:
        return torch.from_numpy(self.mantissas), torch.from_numpy(self.exponents)


@dataclass
class EncodedPair:
    grid: CellGrid
    token_ids: np.ndarray

    @property
    def n_output_tokens(self) -> int:
        """
        Label positions: every token after BOS.
        """
        return len(self.token_ids) - 1


@dataclass
class Batch:
    mantissas: torch.Tensor
    exponents: torch.Tensor
    tokens: torch.Tensor
    n_output_tokens: int

    @property
    def n_input_cells(self) -> int:
        return int(self.mantissas.numel())

    @property
    def decoder_inputs(self) -> torch.Tensor:
        return self.tokens[:, :-1]

    @property
    def labels(self) -> torch.Tensor:
        return self.tokens[:, 1:]


def encode_pair(pair: ExprDatasetPair, vocabulary: Vocabulary, max_length: int = MAX_OUTPUT_LENGTH) -> EncodedPair:
    ids = encode_expression(pair.latex, vocabulary, max_length)
    return EncodedPair(CellGrid.from_pair(pair), np.asarray(ids, dtype=np.int64))


def encode_pairs(pairs: Sequence[ExprDatasetPair], vocabulary: Vocabulary,
                 max_length: int = MAX_OUTPUT_LENGTH) -> List[EncodedPair]:
    return [encode_pair(pair, vocabulary, max_length) for pair in pairs]


def collate(items: Sequence[EncodedPair], pad_id: int) -> Batch:
    """
    Stack grids and pad token sequences to the longest in the batch.
    """
    length = max(len(item.token_ids) for item in items)
    tokens = np.full((len(items), length), pad_id, dtype=np.int64)
    for row, item in enumerate(items):
        tokens[row, :len(item.token_ids)] = item.token_ids
    mantissas = np.stack([item.grid.mantissas for item in items])
    exponents = np.stack([item.grid.exponents for item in items])
    return Batch(
        mantissas=torch.from_numpy(mantissas),
        exponents=torch.from_numpy(exponents),
        tokens=torch.from_numpy(tokens),
        n_output_tokens=sum(item.n_output_tokens for item in items),
    )


class BatchStream:
    def __init__(self, n_items: int, batch_size: int, seed: int, position: int = 0, log_epochs: bool = True) -> None:
        if n_items < 1:
            raise ValueError('cannot stream batches from an empty split')
        self.n_items = n_items
        self.batch_size = batch_size
        self.seed = seed
        self.position = position
        self.log_epochs = log_epochs
        self._permutations: Dict[int, np.ndarray] = {}

    @property
    def epoch(self) -> int:
        return self.position // self.n_items

    def permutation(self, epoch: int) -> np.ndarray:
        if epoch not in self._permutations:
            rng = np.random.default_rng(np.random.SeedSequence((self.seed, epoch)))
            self._permutations = {epoch: rng.permutation(self.n_items)}
        return self._permutations[epoch]

    def next_indices(self) -> List[int]:
        indices = []
        start_epoch = self.epoch
        for _ in range(self.batch_size):
            epoch, offset = divmod(self.position, self.n_items)
            indices.append(int(self.permutation(epoch)[offset]))
            self.position += 1
        if self.log_epochs and self.epoch != start_epoch:
            LOGGER.info(f'training split exhausted; reshuffled for epoch {self.epoch}')
        return indices

    def state_dict(self) -> Dict:
        return {'position': self.position, 'seed': self.seed}

    def load_state_dict(self, state: Dict) -> None:
        self.position = state['position']
        self.seed = state['seed']
