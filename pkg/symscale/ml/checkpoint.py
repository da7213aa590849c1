"""Versioned checkpoints.

A checkpoint holds the model config, the vocabulary and its digest, the
parameter tensors, optional optimizer and stream state, the torch RNG state
and the step counter. Writes go to a temporary file that is then renamed over
the target, so a reader never sees a half-written checkpoint.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Union

# third-party imports
import torch

# symscale
from symscale.exceptions import DataError, VocabularyError
from symscale.ml.model import SymbolicTransformer
from symscale.ml.model_config import ModelConfig
from symscale.tokens.vocabulary import Vocabulary


CHECKPOINT_VERSION: int = 1


@dataclass
class Checkpoint:
    model_config: ModelConfig
    vocabulary: Vocabulary
    state_dict: Dict[str, torch.Tensor]
    step: int = 0
    optimizer: Optional[Dict] = None
    rng_state: Optional[torch.Tensor] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    def build_model(self) -> SymbolicTransformer:
        model = SymbolicTransformer(self.model_config)
        model.load_state_dict(self.state_dict)
        return model


def save_checkpoint(path: Union[Path, str], checkpoint: Checkpoint) -> None:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    payload = {
        'version': CHECKPOINT_VERSION,
        'model_config': checkpoint.model_config.to_dict(),
        'vocabulary': checkpoint.vocabulary.tokens,
        'vocabulary_digest': checkpoint.vocabulary.digest(),
        'state_dict': {name: tensor.detach().cpu() for name, tensor in checkpoint.state_dict.items()},
        'step': checkpoint.step,
        'optimizer': checkpoint.optimizer,
        'rng_state': checkpoint.rng_state,
        'extra': checkpoint.extra,
    }
    temporary = path.with_name(path.name + '.tmp')
    torch.save(payload, temporary)
    os.replace(temporary, path)


def load_checkpoint(path: Union[Path, str], vocabulary: Optional[Vocabulary] = None) -> Checkpoint:
    """
    Raises:
        DataError:
            Raised on a missing file or an unsupported checkpoint version.
        VocabularyError:
            Raised if the stored vocabulary is not ``vocabulary`` or does not
            match its recorded digest.
    """
    path = Path(path)
    if not path.is_file():
        raise DataError(f'no checkpoint at {path}')
    payload = torch.load(path, map_location='cpu', weights_only=False)
    if payload.get('version') != CHECKPOINT_VERSION:
        raise DataError(f'unsupported checkpoint version {payload.get("version")!r} in {path}')
    stored = Vocabulary(payload['vocabulary'])
    if stored.digest() != payload['vocabulary_digest']:
        raise VocabularyError(f'vocabulary digest mismatch inside {path}')
    if vocabulary is not None and vocabulary.digest() != stored.digest():
        raise VocabularyError(f'checkpoint {path} was trained with a different vocabulary')
    return Checkpoint(
        model_config=ModelConfig.from_dict(payload['model_config']),
        vocabulary=stored,
        state_dict=payload['state_dict'],
        step=payload['step'],
        optimizer=payload['optimizer'],
        rng_state=payload['rng_state'],
        extra=payload['extra'],
    )
