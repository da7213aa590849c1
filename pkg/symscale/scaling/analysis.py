"""Scaling-law analysis of a run table.

The table needs ``flops`` and ``validation_loss`` columns; ``acc_solved``,
``acc_r2``, ``n_params`` and ``tokens_out`` are used when present. Laws are
fitted on the validation-loss Pareto front; the per-metric fronts are kept in
the report as well.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional, Sequence, Union

# third-party imports
import pandas as pd

# symscale
from symscale.exceptions import DataError, FitError
from symscale.scaling.pareto import DEFAULT_BINS, pareto_frame
from symscale.scaling.power_law import AccuracyLawFit, PowerLawFit, fit_accuracy_law, fit_power_law
from symscale.scaling.tradeoff import TradeoffReport, optimal_tradeoff


logging.basicConfig(
    format='[symscale][%(asctime)s][%(levelname)s]: %(message)s',
    level=logging.INFO
)
LOGGER: logging.Logger = logging.getLogger(__name__)

ACCURACY_METRICS = ('acc_solved', 'acc_r2')
FITS_FILE: str = 'fits.json'
PARETO_FILE: str = 'pareto.csv'


@dataclass
class ScalingReport:
    front: pd.DataFrame
    loss_law: PowerLawFit
    target_compute: float
    accuracy_laws: Dict[str, AccuracyLawFit] = field(default_factory=dict)
    metric_fronts: Dict[str, pd.DataFrame] = field(default_factory=dict)
    tradeoff: Optional[TradeoffReport] = None
    n_runs: int = 0

    def predictions(self, compute: Optional[float] = None) -> Dict[str, float]:
        compute = self.target_compute if compute is None else compute
        values = {'validation_loss': float(self.loss_law.predict(compute))}
        for metric, law in self.accuracy_laws.items():
            values[metric] = float(law.predict(compute))
        return values

    @property
    def faster_metric(self) -> Optional[str]:
        """
        The accuracy whose error rate shrinks fastest with compute.
        """
        if not self.accuracy_laws:
            return None
        return max(self.accuracy_laws, key=lambda metric: self.accuracy_laws[metric].exponent)

    def to_dict(self) -> Dict:
        return {
            'n_runs': self.n_runs,
            'n_front': int(len(self.front)),
            'target_compute': self.target_compute,
            'loss_law': self.loss_law.to_dict(),
            'accuracy_laws': {metric: law.to_dict() for metric, law in self.accuracy_laws.items()},
            'faster_metric': self.faster_metric,
            'predictions': self.predictions(),
            'metric_fronts': {metric: frame['flops'].tolist() for metric, frame in self.metric_fronts.items()},
            'tradeoff': self.tradeoff.to_dict() if self.tradeoff is not None else None,
        }

    def save(self, out_dir: Union[Path, str]) -> None:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        with open(out_dir / FITS_FILE, 'w', encoding='utf-8', newline='\n') as f:
            f.write(json.dumps(self.to_dict(), indent=2, sort_keys=True) + '\n')
        self.front.to_csv(out_dir / PARETO_FILE, index=False, lineterminator='\n')

    def describe(self) -> str:
        lines = [f'{self.n_runs} runs, {len(self.front)} on the validation-loss Pareto front',
                 f'validation loss = {self.loss_law.a:.4g} * C^{self.loss_law.b:.4f} '
                 f'(log RMSE {self.loss_law.rmse:.4f})']
        for metric, law in self.accuracy_laws.items():
            lines.append(f'1 - {metric} = {law.error_law.a:.4g} * C^{law.error_law.b:.4f} '
                         f'(log RMSE {law.error_law.rmse:.4f})')
        for metric, value in self.predictions().items():
            lines.append(f'predicted {metric} at {self.target_compute:.3g} FLOPs: {value:.4f}')
        if self.faster_metric is not None:
            lines.append(f'fastest improving accuracy: {self.faster_metric}')
        if self.tradeoff is not None:
            lines.append(f'N_opt ~ C^{self.tradeoff.parameter_law.b:.4f}, D_opt ~ C^{self.tradeoff.token_law.b:.4f}, '
                         f'D/N at {self.tradeoff.center_compute:.3g} FLOPs: {self.tradeoff.center_ratio:.2f}')
        return '\n'.join(lines)


def fit_scaling_table(
    frame: pd.DataFrame,
    n_bins: int = DEFAULT_BINS,
    target_compute: float = 3.8e21,
    offset: bool = False,
    budgets: Sequence[float] = (),
) -> ScalingReport:
    """
    Pareto front, loss and accuracy laws and, when the table carries
    ``n_params`` and ``tokens_out``, the compute-optimal trade-off.

    Raises:
        DataError:
            Raised if a required column is missing or the table is empty.
        FitError:
            Raised if the loss law cannot be fitted.
    """
    missing = {'flops', 'validation_loss'} - set(frame.columns)
    if missing:
        raise DataError(f'run table lacks columns: {", ".join(sorted(missing))}')
    frame = frame.dropna(subset=['flops', 'validation_loss']).reset_index(drop=True)
    if frame.empty:
        raise DataError('run table has no evaluated runs')
    front = pareto_frame(frame, 'validation_loss', n_bins=n_bins)
    report = ScalingReport(
        front=front,
        loss_law=fit_power_law(front['flops'], front['validation_loss'], offset=offset),
        target_compute=target_compute,
        metric_fronts={'validation_loss': front},
        n_runs=len(frame),
    )
    for metric in ACCURACY_METRICS:
        if metric not in frame.columns or frame[metric].isna().all():
            continue
        scored = frame.dropna(subset=[metric])
        report.metric_fronts[metric] = pareto_frame(scored, metric, n_bins=n_bins, maximize=True)
        points = front.dropna(subset=[metric])
        try:
            report.accuracy_laws[metric] = fit_accuracy_law(points['flops'], points[metric], offset=offset)
        except FitError as fit_error:
            LOGGER.warning(f'no {metric} law: {fit_error}')
    if {'n_params', 'tokens_out'} <= set(front.columns) and front[['n_params', 'tokens_out']].notna().all().all():
        try:
            report.tradeoff = optimal_tradeoff(front['flops'], front['n_params'], front['tokens_out'], budgets)
        except FitError as fit_error:
            LOGGER.warning(f'no trade-off fit: {fit_error}')
    return report
