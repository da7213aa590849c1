"""Ancestral sampling of output sequences.

Candidates are drawn with the Gumbel-max trick. Each candidate owns its own
numpy generator, so candidate j is the same sequence whether 1 or 128
candidates are drawn for an expression (the candidate sets nest).
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from typing import List, Optional, Sequence

# third-party imports
import numpy as np
import torch

# symscale
from symscale.ml.model import SymbolicTransformer


GREEDY_TEMPERATURE: float = 1e-8


def candidate_rngs(seed: int, expression_index: int, n_candidates: int) -> List[np.random.Generator]:
    return [np.random.default_rng(np.random.SeedSequence((seed, expression_index, j)))
            for j in range(n_candidates)]


@torch.no_grad()
def sample_candidates(
    model: SymbolicTransformer,
    mantissas: torch.Tensor,
    exponents: torch.Tensor,
    rngs: Sequence[np.random.Generator],
    bos_id: int,
    eos_id: int,
    temperature: float = 1.0,
    max_len: Optional[int] = None,
) -> List[List[int]]:
    """
    Sample one token sequence per generator for a single dataset.

    Args:
        model (SymbolicTransformer):
        mantissas, exponents (torch.Tensor):
            Cell grid of one dataset, shape (rows, n_vars + 1) or
            (1, rows, n_vars + 1).
        rngs (Sequence[np.random.Generator]):
            One generator per candidate.
        bos_id, eos_id (int):
        temperature (float=1.0):
            Softmax temperature; values <= 1e-8 decode greedily.
        max_len (int=None):
            Longest sequence including BOS; defaults to the model's maximum
            output length.

    Returns:
        Sequences starting with BOS and ending with EOS unless truncated.
    """
    was_training = model.training
    model.eval()
    max_len = min(max_len or model.config.max_output_length, model.config.max_output_length)
    if mantissas.dim() == 2:
        mantissas, exponents = mantissas.unsqueeze(0), exponents.unsqueeze(0)
    n = len(rngs)
    memory = model.encode(mantissas, exponents).expand(n, -1, -1)
    sequences = [[bos_id] for _ in range(n)]
    tokens = torch.full((n, 1), bos_id, dtype=torch.long, device=mantissas.device)
    active = np.ones(n, dtype=bool)
    greedy = temperature <= GREEDY_TEMPERATURE
    while active.any() and tokens.shape[1] < max_len:
        rows = np.flatnonzero(active)
        index = torch.as_tensor(rows, device=tokens.device)
        logits = model.decoder_forward(memory[index], tokens[index])[:, -1, :]
        logits = logits.double().cpu().numpy()
        next_tokens = np.full(n, eos_id, dtype=np.int64)
        for position, row in enumerate(rows):
            if greedy:
                choice = int(np.argmax(logits[position]))
            else:
                gumbel = -np.log(-np.log(rngs[row].random(logits.shape[1])))
                choice = int(np.argmax(logits[position] / temperature + gumbel))
            next_tokens[row] = choice
            sequences[row].append(choice)
            if choice == eos_id:
                active[row] = False
        tokens = torch.cat([tokens, torch.as_tensor(next_tokens, device=tokens.device).unsqueeze(1)], dim=1)
    if was_training:
        model.train()
    return sequences


def sample_expression(
    model: SymbolicTransformer,
    mantissas: torch.Tensor,
    exponents: torch.Tensor,
    bos_id: int,
    eos_id: int,
    temperature: float = 1.0,
    rng: Optional[np.random.Generator] = None,
    max_len: Optional[int] = None,
) -> List[int]:
    """
    One ancestral sample for one dataset.
    """
    rng = rng if rng is not None else np.random.default_rng()
    return sample_candidates(model, mantissas, exponents, [rng], bos_id, eos_id, temperature, max_len)[0]
