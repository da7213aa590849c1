__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


from unittest import TestCase

import numpy as np
import pandas as pd

from symscale.exceptions import FitError
from symscale.scaling.flops import training_flops
from symscale.scaling.pareto import front_indices, pareto_frame, pareto_front
from symscale.scaling.power_law import fit_accuracy_law, fit_power_law
from symscale.scaling.tradeoff import optimal_tradeoff


class TestFlops(TestCase):

    def test_formula(self):
        self.assertEqual(6.0 * (10 * 100 + 20 * 7), training_flops(10, 20, 100, 7))
        self.assertEqual(0.0, training_flops(0, 0, 5, 5))
        with self.assertRaises(ValueError):
            training_flops(1, 1, -1, 1)


class TestParetoFront(TestCase):

    def test_examples(self):
        runs = [(1.0, 5.0, 'a'), (2.0, 4.0, 'b'), (3.0, 6.0, 'c'), (4.0, 3.0, 'd')]
        self.assertEqual(['a', 'b', 'd'], [run[2] for run in pareto_front(runs)])
        shuffled = [runs[3], runs[0], runs[2], runs[1]]
        self.assertEqual(['a', 'b', 'd'], [run[2] for run in pareto_front(shuffled)])

    def test_loss_strictly_decreasing(self):
        rng = np.random.default_rng(0)
        flops = 10 ** rng.uniform(15, 20, 200)
        losses = rng.uniform(0.1, 1.0, 200)
        front = front_indices(flops, losses)
        self.assertTrue(np.all(np.diff(flops[front]) > 0))
        self.assertTrue(np.all(np.diff(losses[front]) < 0))
        self.assertEqual(int(np.argmin(losses)), int(front[-1]))

    def test_idempotent(self):
        rng = np.random.default_rng(1)
        runs = [(float(c), float(loss), i) for i, (c, loss) in
                enumerate(zip(10 ** rng.uniform(15, 20, 100), rng.uniform(0.1, 1.0, 100)))]
        for n_bins in (3, 20, 1500):
            front = pareto_front(runs, n_bins=n_bins)
            self.assertEqual(front, pareto_front(front, n_bins=n_bins))

    def test_coarse_bins(self):
        runs = [(1.0, 5.0, 'a'), (2.0, 4.0, 'b'), (4.0, 3.0, 'c')]
        self.assertEqual(['c'], [run[2] for run in pareto_front(runs, n_bins=1)])

    def test_equal_compute(self):
        self.assertEqual([(5.0, 1.0, 'b')], pareto_front([(5.0, 2.0, 'a'), (5.0, 1.0, 'b')]))

    def test_frame_maximize(self):
        frame = pd.DataFrame({'flops': [1.0, 2.0, 3.0], 'acc': [0.2, 0.1, 0.5]})
        self.assertEqual([1.0, 3.0], pareto_frame(frame, 'acc', maximize=True)['flops'].tolist())

    def test_bad_input(self):
        with self.assertRaises(ValueError):
            front_indices([], [])
        with self.assertRaises(ValueError):
            front_indices([0.0, 1.0], [1.0, 0.5])
        with self.assertRaises(ValueError):
            front_indices([1.0, 2.0], [1.0, np.nan])
        with self.assertRaises(ValueError):
            front_indices([1.0], [1.0, 2.0])


class TestPowerLaw(TestCase):

    def setUp(self):
        self.c = np.geomspace(1e15, 1e20, 10)

    def test_exact_recovery(self):
        fit = fit_power_law(self.c, 2e3 * self.c ** -0.2)
        self.assertAlmostEqual(2e3, fit.a, delta=2e3 * 1e-6)
        self.assertAlmostEqual(-0.2, fit.b, places=9)
        self.assertLess(fit.rmse, 1e-9)
        self.assertEqual(10, fit.n_points)
        self.assertEqual(1e15, fit.c_min)

    def test_constant(self):
        fit = fit_power_law(self.c, np.full(10, 0.5))
        self.assertAlmostEqual(0.0, fit.b, places=9)
        self.assertAlmostEqual(0.5, fit.predict(1e30), places=6)

    def test_scale_equivariance(self):
        rng = np.random.default_rng(0)
        y = 3.0 * self.c ** -0.1 * np.exp(rng.normal(0.0, 0.05, self.c.size))
        base = fit_power_law(self.c, y)
        scaled_y = fit_power_law(self.c, 7.0 * y)
        self.assertAlmostEqual(base.b, scaled_y.b, places=9)
        self.assertAlmostEqual(7.0 * base.a, scaled_y.a, delta=7.0 * base.a * 1e-6)
        scaled_c = fit_power_law(100.0 * self.c, y)
        self.assertAlmostEqual(base.b, scaled_c.b, places=9)
        self.assertAlmostEqual(base.rmse, scaled_c.rmse, places=9)

    def test_predict_shapes(self):
        fit = fit_power_law([1.0, 10.0], [1.0, 0.1])
        self.assertIsInstance(fit.predict(100.0), float)
        self.assertAlmostEqual(0.01, fit.predict(100.0))
        self.assertEqual((2,), fit.predict([1.0, 2.0]).shape)

    def test_offset(self):
        c = np.geomspace(1.0, 1e4, 20)
        fit = fit_power_law(c, 0.1 + 5.0 * c ** -0.3, offset=True)
        self.assertAlmostEqual(0.1, fit.offset, delta=0.01)
        self.assertAlmostEqual(-0.3, fit.b, delta=0.01)
        self.assertLess(fit.rmse, 1e-3)

    def test_errors(self):
        with self.assertRaises(FitError):
            fit_power_law([1.0, 1.0], [1.0, 2.0])
        with self.assertRaises(FitError):
            fit_power_law([1.0, 2.0], [1.0, -2.0])
        with self.assertRaises(FitError):
            fit_power_law([1.0, 2.0], [1.0])
        with self.assertRaises(FitError):
            fit_power_law([1.0, np.inf], [1.0, 2.0])
        with self.assertRaises(FitError):
            fit_accuracy_law([1.0, 2.0], [0.5, 1.0])


class TestAccuracyLaw(TestCase):

    def test_error_rate_fit(self):
        c = np.geomspace(1e15, 1e19, 6)
        law = fit_accuracy_law(c, 1.0 - 50.0 * c ** -0.12)
        self.assertAlmostEqual(0.12, law.exponent, places=6)
        self.assertAlmostEqual(1.0 - 50.0 * 1e21 ** -0.12, law.predict(1e21), places=6)

    def test_clipped(self):
        law = fit_accuracy_law([1.0, 10.0], [0.0, 0.9])
        with self.assertLogs('symscale.scaling.power_law', 'WARNING'):
            self.assertEqual(0.0, law.predict(1e-3))
        self.assertEqual(law.exponent, law.to_dict()['exponent'])


class TestTradeoff(TestCase):

    def test_exponents(self):
        c = np.geomspace(1e15, 1e19, 8)
        report = optimal_tradeoff(c, 0.1 * c ** 0.5, 2.0 * c ** 0.45, budgets=[1e20])
        self.assertAlmostEqual(0.5, report.parameter_law.b, places=6)
        self.assertAlmostEqual(0.45, report.token_law.b, places=6)
        self.assertAlmostEqual(-0.05, report.exponent_gap, places=6)
        self.assertAlmostEqual(1e17, report.center_compute, delta=1e17 * 1e-9)
        self.assertAlmostEqual(20.0 * 1e17 ** -0.05, report.center_ratio, places=4)
        budget = report.budgets[1e20]
        self.assertAlmostEqual(budget['tokens'] / budget['n_params'], budget['ratio'])
        self.assertIn('1e+20', report.to_dict()['budgets'])
