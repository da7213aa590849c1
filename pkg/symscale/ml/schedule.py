__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import math


def lr_schedule(
    step: float,
    total_steps: int,
    peak: float,
    warmup_fraction: float = 0.05,
    decay_floor: float = 0.01,
) -> float:
    """
    Linear warm-up from 0 to ``peak`` over the first ``warmup_fraction`` of
    the steps, then cosine annealing down to ``decay_floor * peak`` at
    ``total_steps``.

    Args:
        step (float):
            Position in [0, total_steps].
        total_steps (int):
        peak (float):
        warmup_fraction (float=0.05):
        decay_floor (float=0.01):

    Returns:
        The learning rate at ``step``.
    """
    if total_steps < 1:
        raise ValueError(f'total_steps must be >= 1, got {total_steps}')
    if not 0 <= step <= total_steps:
        raise ValueError(f'step {step} outside [0, {total_steps}]')
    warmup = warmup_fraction * total_steps
    if step < warmup:
        return peak * step / warmup
    progress = (step - warmup) / (total_steps - warmup)
    return peak * (decay_floor + (1.0 - decay_floor) * 0.5 * (1.0 + math.cos(math.pi * progress)))
