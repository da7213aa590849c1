"""Power-law fits ``y = a * C^b`` in natural-log space.

Accuracy metrics are fitted through their error rate: ``1 - acc = a * C^b``
with ``b < 0``; predictions ``1 - a * C^b`` are clipped to [0, 1] with a
warning when the law leaves that range.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import logging
from dataclasses import asdict, dataclass
from typing import Dict, Sequence, Union

# third-party imports
import numpy as np
from scipy.optimize import curve_fit
from sklearn.linear_model import LinearRegression

# symscale
from symscale.exceptions import FitError


LOGGER: logging.Logger = logging.getLogger(__name__)

ArrayLike = Union[float, Sequence[float], np.ndarray]


@dataclass(frozen=True)
class PowerLawFit:
    a: float
    b: float
    c_min: float
    c_max: float
    rmse: float
    n_points: int
    offset: float = 0.0

    def predict(self, c: ArrayLike) -> Union[float, np.ndarray]:
        values = self.offset + self.a * np.power(np.asarray(c, dtype=np.float64), self.b)
        return float(values) if np.ndim(values) == 0 else values

    def to_dict(self) -> Dict:
        return asdict(self)


def _validate(c: ArrayLike, y: ArrayLike):
    c = np.asarray(c, dtype=np.float64).ravel()
    y = np.asarray(y, dtype=np.float64).ravel()
    if c.shape != y.shape:
        raise FitError(f'{c.size} compute values but {y.size} observations')
    if not (np.all(np.isfinite(c)) and np.all(np.isfinite(y))):
        raise FitError('power-law data must be finite')
    if np.any(c <= 0):
        raise FitError('compute values must be positive')
    if np.any(y <= 0):
        raise FitError('power laws need positive observations')
    if np.unique(c).size < 2:
        raise FitError('at least two distinct compute values are required')
    return c, y


def _offset_fit(c: np.ndarray, y: np.ndarray, start: PowerLawFit) -> PowerLawFit:
    # compute is rescaled by its geometric mean to keep the problem well conditioned
    reference = float(np.exp(np.mean(np.log(c))))
    x = c / reference

    def log_model(x_, e, a, b):
        return np.log(e + a * np.power(x_, b))

    guess = (0.0, start.a * reference ** start.b, start.b)
    lower = (0.0, 1e-300, -np.inf)
    upper = (float(y.min()) * (1 - 1e-9), np.inf, np.inf)
    try:
        (e, a, b), _ = curve_fit(log_model, x, np.log(y), p0=guess, bounds=(lower, upper), maxfev=20000)
    except (RuntimeError, ValueError) as fit_error:
        raise FitError(f'offset power-law fit did not converge: {fit_error}') from fit_error
    residuals = log_model(x, e, a, b) - np.log(y)
    return PowerLawFit(a=float(a * reference ** (-b)), b=float(b), c_min=float(c.min()), c_max=float(c.max()),
                       rmse=float(np.sqrt(np.mean(residuals ** 2))), n_points=int(c.size), offset=float(e))


def fit_power_law(c: ArrayLike, y: ArrayLike, offset: bool = False) -> PowerLawFit:
    """
    Least-squares fit of ``ln y = ln a + b ln C``.

    Args:
        c (array-like):
            Positive compute values, at least two distinct.
        y (array-like):
            Positive observations.
        offset (bool=False):
            Fit ``y = e + a * C^b`` with an irreducible term ``e >= 0``.

    Returns:
        PowerLawFit with the log-space RMSE of the residuals.

    Raises:
        FitError:
            Raised for fewer than two distinct compute values, non-positive
            observations or non-finite data.
    """
    c, y = _validate(c, y)
    log_c, log_y = np.log(c), np.log(y)
    regression = LinearRegression().fit(log_c.reshape(-1, 1), log_y)
    residuals = regression.predict(log_c.reshape(-1, 1)) - log_y
    fit = PowerLawFit(
        a=float(np.exp(regression.intercept_)),
        b=float(regression.coef_[0]),
        c_min=float(c.min()),
        c_max=float(c.max()),
        rmse=float(np.sqrt(np.mean(residuals ** 2))),
        n_points=int(c.size),
    )
    return _offset_fit(c, y, fit) if offset else fit


@dataclass(frozen=True)
class AccuracyLawFit:
    error_law: PowerLawFit

    @property
    def exponent(self) -> float:
        """
        Rate at which the error rate shrinks with compute.
        """
        return -self.error_law.b

    def predict(self, c: ArrayLike) -> Union[float, np.ndarray]:
        raw = 1.0 - np.asarray(self.error_law.predict(c), dtype=np.float64)
        clipped = np.clip(raw, 0.0, 1.0)
        if np.any(clipped != raw):
            LOGGER.warning('accuracy law leaves [0, 1] at some requested compute; predictions clipped')
        return float(clipped) if np.ndim(clipped) == 0 else clipped

    def to_dict(self) -> Dict:
        return dict(self.error_law.to_dict(), exponent=self.exponent)


def fit_accuracy_law(c: ArrayLike, accuracy: ArrayLike, offset: bool = False) -> AccuracyLawFit:
    """
    Fit ``1 - acc = a * C^b``.

    Raises:
        FitError:
            Raised if an accuracy is outside [0, 1), besides the power-law
            errors.
    """
    accuracy = np.asarray(accuracy, dtype=np.float64).ravel()
    if np.any(accuracy < 0) or np.any(accuracy >= 1):
        raise FitError('accuracies must lie in [0, 1)')
    return AccuracyLawFit(fit_power_law(c, 1.0 - accuracy, offset=offset))
