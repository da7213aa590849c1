"""Compute Pareto fronts.

Compute is split into ``n_bins`` log-spaced intervals between the smallest
and largest FLOPs. Walking the bin boundaries upwards, the best run of a bin
is kept when it beats the lowest loss seen at any smaller compute. The front
is recomputed on its own output until it no longer changes, which makes the
operation idempotent.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from typing import Any, List, Sequence, Tuple

# third-party imports
import numpy as np
import pandas as pd


DEFAULT_BINS: int = 1500

Run = Tuple[float, float, Any]


def _front_indices(flops: np.ndarray, losses: np.ndarray, n_bins: int) -> np.ndarray:
    order = np.lexsort((losses, flops))
    flops, losses = flops[order], losses[order]
    low, high = flops[0], flops[-1]
    if low == high:
        return order[:1]
    edges = np.geomspace(low, high, n_bins + 1)
    bins = np.clip(np.searchsorted(edges, flops, side='left'), 1, n_bins)
    keep, best = [], np.inf
    for bin_index in np.unique(bins):
        members = np.flatnonzero(bins == bin_index)
        winner = members[np.argmin(losses[members])]
        if losses[winner] < best:
            best = losses[winner]
            keep.append(winner)
    return order[np.asarray(keep, dtype=int)]


def front_indices(flops: Sequence[float], losses: Sequence[float], n_bins: int = DEFAULT_BINS) -> np.ndarray:
    """
    Positions of the Pareto-front runs, sorted by compute.

    Raises:
        ValueError:
            Raised for an empty input, non-positive compute or non-finite
            values.
    """
    flops = np.asarray(flops, dtype=np.float64)
    losses = np.asarray(losses, dtype=np.float64)
    if flops.size == 0:
        raise ValueError('at least one run is required')
    if flops.shape != losses.shape:
        raise ValueError('compute and loss arrays differ in length')
    if np.any(flops <= 0) or not np.all(np.isfinite(flops)) or not np.all(np.isfinite(losses)):
        raise ValueError('compute must be positive and all values finite')
    if n_bins < 1:
        raise ValueError('n_bins must be positive')
    selected = np.arange(flops.size)
    while True:
        kept = selected[_front_indices(flops[selected], losses[selected], n_bins)]
        if kept.size == selected.size:
            return kept
        selected = np.sort(kept)


def pareto_front(runs: Sequence[Run], n_bins: int = DEFAULT_BINS) -> List[Run]:
    """
    Keep the runs that set a new minimum loss up to their compute level.

    Args:
        runs (Sequence[(flops, loss, payload)]):
        n_bins (int=1500):

    Returns:
        Retained runs sorted by compute, with strictly decreasing loss.
    """
    runs = list(runs)
    indices = front_indices([run[0] for run in runs], [run[1] for run in runs], n_bins)
    return [runs[i] for i in indices]


def pareto_frame(frame: pd.DataFrame, objective: str = 'validation_loss', flops_column: str = 'flops',
                 n_bins: int = DEFAULT_BINS, maximize: bool = False) -> pd.DataFrame:
    """
    Pareto-front rows of a run table; accuracies are handled with
    ``maximize=True``.
    """
    values = frame[objective].to_numpy(dtype=np.float64)
    indices = front_indices(frame[flops_column].to_numpy(dtype=np.float64), -values if maximize else values, n_bins)
    return frame.iloc[indices].reset_index(drop=True)
