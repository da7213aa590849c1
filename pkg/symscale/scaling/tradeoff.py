__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from dataclasses import dataclass, field
from typing import Dict, Sequence, Union

# third-party imports
import numpy as np

# symscale
from symscale.scaling.power_law import ArrayLike, PowerLawFit, fit_power_law


@dataclass
class TradeoffReport:
    """
    Compute-optimal model size ``N_opt(C) = a * C^alpha`` and token count
    ``D_opt(C) = a' * C^beta``.
    """
    parameter_law: PowerLawFit
    token_law: PowerLawFit
    center_compute: float
    budgets: Dict[float, Dict[str, float]] = field(default_factory=dict)

    @property
    def exponent_gap(self) -> float:
        """
        beta - alpha; positive when data should grow faster than the model.
        """
        return self.token_law.b - self.parameter_law.b

    def ratio(self, c: ArrayLike) -> Union[float, np.ndarray]:
        values = np.asarray(self.token_law.predict(c)) / np.asarray(self.parameter_law.predict(c))
        return float(values) if np.ndim(values) == 0 else values

    @property
    def center_ratio(self) -> float:
        return float(self.ratio(self.center_compute))

    def to_dict(self) -> Dict:
        return {
            'parameter_law': self.parameter_law.to_dict(),
            'token_law': self.token_law.to_dict(),
            'exponent_gap': self.exponent_gap,
            'center_compute': self.center_compute,
            'center_ratio': self.center_ratio,
            'budgets': {f'{c:.6g}': values for c, values in self.budgets.items()},
        }


def optimal_tradeoff(compute: ArrayLike, n_params: ArrayLike, tokens: ArrayLike,
                     budgets: Sequence[float] = ()) -> TradeoffReport:
    """
    Fit the optimal parameter and token counts of Pareto-front runs against
    compute.

    Args:
        compute (array-like):
            FLOPs of each front run.
        n_params (array-like):
            Parameter count N of each front run.
        tokens (array-like):
            Output tokens D_out seen by each front run.
        budgets (Sequence[float]=()):
            Compute budgets to report N, D and D/N at.

    Raises:
        FitError:
            As ``fit_power_law``.
    """
    compute = np.asarray(compute, dtype=np.float64)
    report = TradeoffReport(
        parameter_law=fit_power_law(compute, n_params),
        token_law=fit_power_law(compute, tokens),
        center_compute=float(np.exp(np.mean(np.log(compute)))),
    )
    for budget in budgets:
        n_opt = float(report.parameter_law.predict(budget))
        d_opt = float(report.token_law.predict(budget))
        report.budgets[float(budget)] = {'n_params': n_opt, 'tokens': d_opt, 'ratio': d_opt / n_opt}
    return report
