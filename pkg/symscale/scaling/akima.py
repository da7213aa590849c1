"""Akima interpolation.

Knot slopes are weighted averages of the neighbouring secant slopes, with two
synthetic secants extrapolated past each boundary. When both weights vanish
the slope is the mean of the two adjacent secants. Changing one knot only
moves the curve within three intervals on either side of it.

With fewer than five knots the construction has no interior to work with; a
natural cubic spline is used for three or four knots and a straight line for
two.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from typing import Sequence, Union

# third-party imports
import numpy as np
from scipy.interpolate import CubicSpline


FLAT_TOLERANCE: float = 1e-9


def akima_slopes(xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    secants = np.diff(ys) / np.diff(xs)
    extended = np.empty(secants.size + 4)
    extended[2:-2] = secants
    extended[1] = 2.0 * extended[2] - extended[3]
    extended[0] = 2.0 * extended[1] - extended[2]
    extended[-2] = 2.0 * extended[-3] - extended[-4]
    extended[-1] = 2.0 * extended[-2] - extended[-3]
    jumps = np.abs(np.diff(extended))
    right, left = jumps[2:], jumps[:-2]
    total = right + left
    slopes = 0.5 * (extended[1:-2] + extended[2:-1])
    weighted = total > FLAT_TOLERANCE * total.max() if total.max() > 0 else np.zeros_like(total, dtype=bool)
    slopes[weighted] = ((right * extended[1:-2] + left * extended[2:-1])[weighted]) / total[weighted]
    return slopes


class AkimaInterpolant:
    """
    Piecewise-cubic C¹ interpolant through strictly increasing knots.
    Evaluation outside the knot range extends the end pieces.
    """

    def __init__(self, xs: Sequence[float], ys: Sequence[float]) -> None:
        xs = np.asarray(xs, dtype=np.float64)
        ys = np.asarray(ys, dtype=np.float64)
        if xs.ndim != 1 or xs.shape != ys.shape:
            raise ValueError('knots must be two 1-d arrays of equal length')
        if xs.size < 2:
            raise ValueError('at least two knots are required')
        if not (np.all(np.isfinite(xs)) and np.all(np.isfinite(ys))):
            raise ValueError('knots must be finite')
        steps = np.diff(xs)
        if np.any(steps == 0):
            raise ValueError('duplicate knot abscissae')
        if np.any(steps < 0):
            raise ValueError('knot abscissae must be strictly increasing')
        self.xs, self.ys = xs, ys
        self._spline = CubicSpline(xs, ys, bc_type='natural') if xs.size in (3, 4) else None
        if xs.size >= 5:
            slopes = akima_slopes(xs, ys)
            secants = np.diff(ys) / steps
            self._c1 = slopes[:-1]
            self._c2 = (3.0 * secants - 2.0 * slopes[:-1] - slopes[1:]) / steps
            self._c3 = (slopes[:-1] + slopes[1:] - 2.0 * secants) / steps ** 2

    @property
    def method(self) -> str:
        if self.xs.size >= 5:
            return 'akima'
        return 'natural-cubic' if self._spline is not None else 'linear'

    def __call__(self, x: Union[float, Sequence[float], np.ndarray]) -> Union[float, np.ndarray]:
        points = np.asarray(x, dtype=np.float64)
        if self._spline is not None:
            values = self._spline(points)
        elif self.xs.size == 2:
            slope = (self.ys[1] - self.ys[0]) / (self.xs[1] - self.xs[0])
            values = self.ys[0] + slope * (points - self.xs[0])
        else:
            piece = np.clip(np.searchsorted(self.xs, points, side='right') - 1, 0, self.xs.size - 2)
            s = points - self.xs[piece]
            values = self.ys[piece] + s * (self._c1[piece] + s * (self._c2[piece] + s * self._c3[piece]))
        return float(values) if np.ndim(values) == 0 else values


def akima_interpolate(xs: Sequence[float], ys: Sequence[float]) -> AkimaInterpolant:
    return AkimaInterpolant(xs, ys)
