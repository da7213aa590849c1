"""Optimizer steps.

``OptimizerStep`` is the interface the trainer drives: clip, check, update at
a given learning rate. ``DecoupledAdam`` is Adam with decoupled weight decay
applied to weight matrices only.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import logging
from abc import ABC, abstractmethod
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

# third-party imports
import torch
from torch import nn

# symscale
from symscale.config.pipeline import TrainConfig


LOGGER: logging.Logger = logging.getLogger(__name__)


class StepOutcome(NamedTuple):
    grad_norm: float
    skipped: bool


class OptimizerStep(ABC):
    """
    Subclasses wrap a concrete update rule behind ``step(lr)``.
    """

    _NAME: str = NotImplemented

    def __init_subclass__(cls, **kwargs):
        super().__init_subclass__(**kwargs)
        if cls._NAME is NotImplemented:
            raise NotImplementedError('Class attribute `_NAME` not implemented.')

    def __init__(self, parameters: Sequence[torch.Tensor], clip_value: float = 1.0) -> None:
        self.parameters: List[torch.Tensor] = list(parameters)
        self.clip_value = clip_value
        self.skipped_steps: int = 0

    def zero_grad(self) -> None:
        for parameter in self.parameters:
            parameter.grad = None

    def clip(self) -> float:
        """
        Clip the global gradient norm in place; returns the norm before clipping.
        """
        norm = nn.utils.clip_grad_norm_(self.parameters, self.clip_value)
        return float(norm)

    def step(self, lr: float) -> StepOutcome:
        """
        Clip, then update. A non-finite gradient norm skips the update.
        """
        norm = self.clip()
        if not torch.isfinite(torch.tensor(norm)):
            self.skipped_steps += 1
            LOGGER.warning(f'non-finite gradient norm {norm}; step skipped ({self.skipped_steps} so far)')
            self.zero_grad()
            return StepOutcome(norm, True)
        self.update(lr)
        return StepOutcome(norm, False)

    @abstractmethod
    def update(self, lr: float) -> None:
        raise NotImplementedError

    @abstractmethod
    def state_dict(self) -> Dict:
        raise NotImplementedError

    @abstractmethod
    def load_state_dict(self, state: Dict) -> None:
        raise NotImplementedError


class DecoupledAdam(OptimizerStep):
    _NAME = 'adam-decoupled'

    def __init__(
        self,
        decay_parameters: Sequence[torch.Tensor],
        other_parameters: Sequence[torch.Tensor] = (),
        weight_decay: float = 0.1,
        betas: Tuple[float, float] = (0.9, 0.98),
        eps: float = 1e-9,
        clip_value: float = 1.0,
    ) -> None:
        super().__init__(list(decay_parameters) + list(other_parameters), clip_value)
        groups = [{'params': list(decay_parameters), 'weight_decay': weight_decay}]
        if other_parameters:
            groups.append({'params': list(other_parameters), 'weight_decay': 0.0})
        self.optimizer = torch.optim.AdamW(groups, lr=0.0, betas=betas, eps=eps)

    @classmethod
    def for_model(cls, model: nn.Module, config: TrainConfig, decay_names: Iterable[str]) -> 'DecoupledAdam':
        decay_names = set(decay_names)
        decay, other = [], []
        for name, parameter in model.named_parameters():
            (decay if name in decay_names else other).append(parameter)
        return cls(decay, other, weight_decay=config.weight_decay, betas=(config.beta1, config.beta2),
                   eps=config.eps, clip_value=config.clip_value)

    def update(self, lr: float) -> None:
        for group in self.optimizer.param_groups:
            group['lr'] = lr
        self.optimizer.step()

    def state_dict(self) -> Dict:
        return {'optimizer': self.optimizer.state_dict(), 'skipped_steps': self.skipped_steps}

    def load_state_dict(self, state: Dict) -> None:
        self.optimizer.load_state_dict(state['optimizer'])
        self.skipped_steps = state['skipped_steps']
