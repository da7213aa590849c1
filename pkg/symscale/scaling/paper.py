"""The published results table.

``data/paper_results.csv`` lists, for each of the five model sizes, its swept
batch size and learning rate and five checkpoints of (FLOPs, Acc_solved,
Acc_{R²>0.99}, validation loss).
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import os
from pathlib import Path
from typing import Optional, Union

# third-party imports
import pandas as pd
import regex as re

# symscale
from symscale import get_module_path
from symscale.exceptions import DataError
from symscale.scaling.analysis import ScalingReport, fit_scaling_table
from symscale.scaling.pareto import DEFAULT_BINS
from symscale.utils.checksums import verify_sha256


PAPER_RESULTS_PATH: str = os.path.join(get_module_path(), 'scaling', 'data', 'paper_results.csv')
PAPER_RESULTS_SHA256: str = '765828e3af5ac90b34a4262a935884b909f595eb8f3bc493e26202a6ec6f8b6b'
TABLE_COLUMNS = ['size', 'batch_size', 'learning_rate', 'flops', 'acc_solved', 'acc_r2', 'validation_loss']
TARGET_COMPUTE: float = 3.8e21

SIZE_LABEL_PATTERN = re.compile(r'^\s*(?P<number>\d+(?:\.\d+)?)\s*(?P<unit>[KMB]?)\s*$', re.IGNORECASE)
SIZE_UNITS = {'': 1.0, 'K': 1e3, 'M': 1e6, 'B': 1e9}


def parse_size_label(label: str) -> float:
    """
    '6.5M' -> 6.5e6
    """
    match = SIZE_LABEL_PATTERN.match(str(label))
    if match is None:
        raise DataError(f'not a model size label: {label!r}')
    return float(match.group('number')) * SIZE_UNITS[match.group('unit').upper()]


def load_results_table(path: Optional[Union[Path, str]] = None, verify: bool = True) -> pd.DataFrame:
    """
    Read a table in the published results layout and add ``n_params`` parsed
    from the size labels. The packaged table is checksum-verified.
    """
    if path is None:
        path = PAPER_RESULTS_PATH
        if verify:
            verify_sha256(path, PAPER_RESULTS_SHA256)
    frame = pd.read_csv(path, dtype={'size': str})
    missing = set(TABLE_COLUMNS) - set(frame.columns)
    if missing:
        raise DataError(f'{path} lacks columns: {", ".join(sorted(missing))}')
    frame['n_params'] = frame['size'].map(parse_size_label)
    return frame


def reproduce_paper_fits(n_bins: int = DEFAULT_BINS, target_compute: float = TARGET_COMPUTE,
                         offset: bool = False) -> ScalingReport:
    """
    Pareto front and scaling laws of the published table, extrapolated to
    ``target_compute``.
    """
    return fit_scaling_table(load_results_table(), n_bins=n_bins, target_compute=target_compute, offset=offset)
