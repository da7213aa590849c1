__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import logging
from pathlib import Path
from typing import Dict, List, Sequence, Union

# third-party imports
import numpy as np
import pandas as pd

# symscale
from symscale.exceptions import DataError
from symscale.ml.trainer import RUN_RECORD_FILE, RunRecord
from symscale.scaling.hparams import SweepGrid


LOGGER: logging.Logger = logging.getLogger(__name__)

RUN_COLUMNS = ['run', 'size', 'n_params', 'n_total', 'batch_size', 'learning_rate', 'token_ratio', 'step',
               'flops', 'tokens_in', 'tokens_out', 'train_loss', 'validation_loss', 'acc_solved', 'acc_r2',
               'final']


def find_run_records(paths: Sequence[Union[Path, str]]) -> List[Path]:
    """
    ``run_record.json`` files named directly or found below the given
    directories, in sorted order.
    """
    found = set()
    for path in map(Path, paths):
        if path.is_file() and path.name == RUN_RECORD_FILE:
            found.add(path)
        elif path.is_dir():
            found.update(path.rglob(RUN_RECORD_FILE))
        else:
            raise DataError(f'no run record at {path}')
    return sorted(found)


def record_rows(record: RunRecord, run: str) -> List[Dict]:
    train = record.config['train']
    plan = record.plan
    rows = []
    for i, point in enumerate(record.points):
        final = i == len(record.points) - 1
        rows.append({
            'run': run,
            'size': record.size_label,
            'n_params': plan['n_enc'] + plan['n_dec'],
            'n_total': plan['n_total'],
            'batch_size': train['batch_size'],
            'learning_rate': train['learning_rate'],
            'token_ratio': train['token_ratio'],
            'step': point.step,
            'flops': point.flops,
            'tokens_in': point.tokens_in,
            'tokens_out': point.tokens_out,
            'train_loss': point.train_loss,
            'validation_loss': point.validation_loss,
            'acc_solved': record.final_metrics.get('acc_solved', np.nan) if final else np.nan,
            'acc_r2': record.final_metrics.get('acc_r2', np.nan) if final else np.nan,
            'final': final,
        })
    return rows


def load_run_table(paths: Sequence[Union[Path, str]]) -> pd.DataFrame:
    """
    One row per eval point of every run found under ``paths``.

    Raises:
        DataError:
            Raised if no run record is found.
    """
    records = find_run_records(paths)
    if not records:
        raise DataError('no run records found')
    rows = []
    for path in records:
        rows.extend(record_rows(RunRecord.load(path), str(path.parent)))
    LOGGER.info(f'loaded {len(rows)} eval points from {len(records)} runs')
    return pd.DataFrame(rows, columns=RUN_COLUMNS)


def sweep_grid_from_table(table: pd.DataFrame) -> SweepGrid:
    """
    Final validation loss of every run as a sweep grid over
    (N, batch size, learning rate).
    """
    final = table[table['final']]
    return SweepGrid.from_frame(final[['n_params', 'batch_size', 'learning_rate', 'validation_loss']])
