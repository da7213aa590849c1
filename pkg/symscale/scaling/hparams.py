"""Optimal batch size and learning rate from a sweep grid.

Two interpolation steps per model size: for every batch size the final
validation loss is interpolated over ln(lr) and minimized, giving lr*(N, B)
and L*(N, B); then L* is interpolated over ln(B) and minimized, giving B*(N),
and lr*(N) is lr*(N, B) interpolated at B*. Power laws in N are fitted to
both optima when at least two sizes are present.

The minimizations use bounded Brent (scipy `minimize_scalar` with
`method='bounded'`), which is golden-section search sped up by
parabolic steps.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import logging
from dataclasses import asdict, dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

# third-party imports
import numpy as np
import pandas as pd
from scipy.optimize import minimize_scalar

# symscale
from symscale.exceptions import InsufficientGridError
from symscale.scaling.akima import akima_interpolate
from symscale.scaling.power_law import PowerLawFit, fit_power_law


LOGGER: logging.Logger = logging.getLogger(__name__)

MIN_LEARNING_RATES: int = 3
SEARCH_TOLERANCE: float = 1e-6
GRID_COLUMNS = ['n_params', 'batch_size', 'learning_rate', 'validation_loss']


@dataclass(frozen=True)
class SweepPoint:
    n_params: float
    batch_size: int
    learning_rate: float
    loss: float


class SweepGrid:
    """
    Final validation losses of a (model size, batch size, learning rate)
    grid search.
    """

    def __init__(self, points: Sequence[SweepPoint]) -> None:
        self.points = list(points)

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> 'SweepGrid':
        return cls([SweepPoint(float(row.n_params), int(row.batch_size), float(row.learning_rate),
                               float(row.validation_loss)) for row in frame.itertuples(index=False)])

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([(p.n_params, p.batch_size, p.learning_rate, p.loss) for p in self.points],
                            columns=GRID_COLUMNS)

    def sizes(self) -> List[float]:
        return sorted({p.n_params for p in self.points})

    def batch_sizes(self, n_params: float) -> List[int]:
        return sorted({p.batch_size for p in self.points if p.n_params == n_params})

    def row(self, n_params: float, batch_size: int) -> Tuple[np.ndarray, np.ndarray]:
        """
        Learning rates (sorted) and losses of one (size, batch) row; repeated
        learning rates keep the lowest loss.
        """
        best: Dict[float, float] = {}
        for p in self.points:
            if p.n_params == n_params and p.batch_size == batch_size:
                best[p.learning_rate] = min(p.loss, best.get(p.learning_rate, np.inf))
        rates = np.array(sorted(best))
        return rates, np.array([best[rate] for rate in rates])

    def problems(self) -> Dict[float, List[str]]:
        found: Dict[float, List[str]] = {}
        for n_params in self.sizes():
            issues = []
            all_rates = sorted({p.learning_rate for p in self.points if p.n_params == n_params})
            for batch_size in self.batch_sizes(n_params):
                rates, losses = self.row(n_params, batch_size)
                missing = [rate for rate in all_rates if rate not in set(rates)]
                if rates.size < MIN_LEARNING_RATES:
                    issues.append(f'batch {batch_size}: {rates.size} learning rates, need {MIN_LEARNING_RATES}'
                                  + (f' (missing {", ".join(f"{rate:g}" for rate in missing)})' if missing else ''))
                if not np.all(np.isfinite(losses)):
                    issues.append(f'batch {batch_size}: non-finite losses')
            if issues:
                found[n_params] = issues
        return found

    def validate(self) -> 'SweepGrid':
        if not self.points:
            raise InsufficientGridError('the sweep grid is empty')
        found = self.problems()
        if found:
            lines = [f'N={n_params:g}: ' + '; '.join(issues) for n_params, issues in found.items()]
            raise InsufficientGridError('insufficient sweep coverage:\n  ' + '\n  '.join(lines))
        return self


def interpolated_minimum(xs: np.ndarray, ys: np.ndarray) -> Tuple[float, float]:
    """
    Minimum of the Akima interpolant of (xs, ys), searched around the best
    knot.

    Returns:
        (x*, y*)
    """
    order = np.argsort(xs)
    xs, ys = np.asarray(xs, dtype=np.float64)[order], np.asarray(ys, dtype=np.float64)[order]
    if xs.size == 1:
        return float(xs[0]), float(ys[0])
    interpolant = akima_interpolate(xs, ys)
    k = int(np.argmin(ys))
    low, high = xs[max(k - 1, 0)], xs[min(k + 1, xs.size - 1)]
    result = minimize_scalar(interpolant, bounds=(low, high), method='bounded',
                             options={'xatol': SEARCH_TOLERANCE})
    if float(result.fun) > ys[k]:
        return float(xs[k]), float(ys[k])
    return float(result.x), float(result.fun)


@dataclass
class HparamOptimum:
    n_params: float
    batch_size: float
    learning_rate: float
    loss: float
    per_batch: Dict[int, Tuple[float, float]] = field(default_factory=dict)

    def to_dict(self) -> Dict:
        payload = asdict(self)
        payload['per_batch'] = {str(b): {'learning_rate': lr, 'loss': loss} for b, (lr, loss) in self.per_batch.items()}
        return payload


@dataclass
class HparamReport:
    optima: List[HparamOptimum]
    batch_law: Optional[PowerLawFit] = None
    learning_rate_law: Optional[PowerLawFit] = None

    def to_frame(self) -> pd.DataFrame:
        return pd.DataFrame([(o.n_params, o.batch_size, o.learning_rate, o.loss) for o in self.optima],
                            columns=['n_params', 'batch_size', 'learning_rate', 'loss'])

    def to_dict(self) -> Dict:
        return {
            'optima': [optimum.to_dict() for optimum in self.optima],
            'batch_law': self.batch_law.to_dict() if self.batch_law else None,
            'learning_rate_law': self.learning_rate_law.to_dict() if self.learning_rate_law else None,
        }


def optimum_for_size(grid: SweepGrid, n_params: float) -> HparamOptimum:
    per_batch: Dict[int, Tuple[float, float]] = {}
    for batch_size in grid.batch_sizes(n_params):
        rates, losses = grid.row(n_params, batch_size)
        log_rate, loss = interpolated_minimum(np.log(rates), losses)
        per_batch[batch_size] = (float(np.exp(log_rate)), loss)
    batches = np.array(sorted(per_batch), dtype=np.float64)
    best_losses = np.array([per_batch[int(b)][1] for b in batches])
    log_rates = np.log([per_batch[int(b)][0] for b in batches])
    if batches.size == 1:
        LOGGER.warning(f'N={n_params:g}: a single batch size was swept; it is taken as optimal')
        log_batch, loss = float(np.log(batches[0])), float(best_losses[0])
        learning_rate = float(np.exp(log_rates[0]))
    else:
        log_batch, loss = interpolated_minimum(np.log(batches), best_losses)
        learning_rate = float(np.exp(akima_interpolate(np.log(batches), log_rates)(log_batch)))
    return HparamOptimum(n_params=n_params, batch_size=float(np.exp(log_batch)), learning_rate=learning_rate,
                         loss=loss, per_batch=per_batch)


def optimal_hparams(grid: SweepGrid) -> HparamReport:
    """
    Interpolated optimal (lr, batch) per model size and their power laws in N.

    Raises:
        InsufficientGridError:
            Raised listing every size whose grid rows are too sparse.
    """
    grid.validate()
    optima = [optimum_for_size(grid, n_params) for n_params in grid.sizes()]
    report = HparamReport(optima)
    if len(optima) >= 2:
        sizes = [o.n_params for o in optima]
        report.batch_law = fit_power_law(sizes, [o.batch_size for o in optima])
        report.learning_rate_law = fit_power_law(sizes, [o.learning_rate for o in optima])
    return report


def best_sampled_hparams(frame: pd.DataFrame, size_column: str = 'n_params') -> pd.DataFrame:
    """
    Per size, the sampled (batch, lr) with the lowest final validation loss.
    """
    final = frame.sort_values('flops').groupby([size_column, 'batch_size', 'learning_rate'], as_index=False).last()
    best = final.loc[final.groupby(size_column)['validation_loss'].idxmin()]
    return best[[size_column, 'batch_size', 'learning_rate', 'validation_loss']].sort_values(size_column) \
        .reset_index(drop=True)
