__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


from unittest import TestCase

import numpy as np
from scipy.interpolate import Akima1DInterpolator

from symscale.scaling.akima import AkimaInterpolant, akima_interpolate


def random_knots(n=12, seed=0):
    rng = np.random.default_rng(seed)
    xs = np.sort(rng.uniform(0.0, 10.0, n))
    return xs, rng.normal(0.0, 1.0, n)


class TestAkima(TestCase):

    def test_passes_through_knots(self):
        xs, ys = random_knots()
        interpolant = akima_interpolate(xs, ys)
        self.assertTrue(np.allclose(ys, interpolant(xs), rtol=1e-12, atol=1e-12))
        self.assertEqual('akima', interpolant.method)

    def test_linear_data(self):
        xs = np.array([0.0, 1.0, 1.5, 4.0, 7.0, 8.0])
        interpolant = AkimaInterpolant(xs, 2.0 * xs + 1.0)
        points = np.linspace(-1.0, 9.0, 41)
        self.assertTrue(np.allclose(2.0 * points + 1.0, interpolant(points)))

    def test_matches_scipy(self):
        for seed in range(3):
            xs, ys = random_knots(seed=seed)
            points = np.linspace(xs[0], xs[-1], 301)
            expected = Akima1DInterpolator(xs, ys)(points)
            self.assertTrue(np.allclose(expected, akima_interpolate(xs, ys)(points), rtol=1e-9, atol=1e-9))

    def test_local(self):
        xs, ys = random_knots(n=14, seed=4)
        k = 7
        moved = ys.copy()
        moved[k] += 3.0
        points = np.linspace(xs[0] - 1.0, xs[-1] + 1.0, 2001)
        outside = (points < xs[k - 3]) | (points > xs[k + 3])
        before, after = akima_interpolate(xs, ys)(points), akima_interpolate(xs, moved)(points)
        self.assertTrue(np.allclose(before[outside], after[outside], rtol=0.0, atol=1e-12))
        self.assertFalse(np.allclose(before[~outside], after[~outside]))

    def test_few_knots(self):
        line = AkimaInterpolant([1.0, 3.0], [2.0, 6.0])
        self.assertEqual('linear', line.method)
        self.assertEqual(4.0, line(2.0))
        cubic = AkimaInterpolant([0.0, 1.0, 3.0], [1.0, -1.0, 2.0])
        self.assertEqual('natural-cubic', cubic.method)
        self.assertTrue(np.allclose([1.0, -1.0, 2.0], cubic([0.0, 1.0, 3.0])))

    def test_scalar_result(self):
        xs, ys = random_knots()
        self.assertIsInstance(akima_interpolate(xs, ys)(float(xs[3])), float)

    def test_bad_knots(self):
        with self.assertRaises(ValueError):
            AkimaInterpolant([1.0], [1.0])
        with self.assertRaises(ValueError):
            AkimaInterpolant([1.0, 1.0, 2.0], [1.0, 2.0, 3.0])
        with self.assertRaises(ValueError):
            AkimaInterpolant([2.0, 1.0], [1.0, 2.0])
        with self.assertRaises(ValueError):
            AkimaInterpolant([1.0, 2.0], [1.0, np.nan])
        with self.assertRaises(ValueError):
            AkimaInterpolant([1.0, 2.0, 3.0], [1.0, 2.0])
