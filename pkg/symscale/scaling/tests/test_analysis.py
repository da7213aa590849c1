__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


import json
import tempfile
from pathlib import Path
from unittest import TestCase

import numpy as np
import pandas as pd

from symscale.exceptions import DataError
from symscale.ml.trainer import RUN_RECORD_FILE, EvalPoint, RunRecord
from symscale.scaling.analysis import FITS_FILE, PARETO_FILE, fit_scaling_table
from symscale.scaling.hparams import optimal_hparams
from symscale.scaling.paper import PAPER_RESULTS_PATH, PAPER_RESULTS_SHA256, TABLE_COLUMNS, load_results_table, \
    parse_size_label, reproduce_paper_fits
from symscale.scaling.plotting import plot_hparam_trends, plot_scaling_report, plot_sweep_heatmap
from symscale.scaling.runs import find_run_records, load_run_table, sweep_grid_from_table
from symscale.scaling.tests.test_hparams import quadratic_grid
from symscale.tests.values_comparer import values_look_equal
from symscale.utils.checksums import sha256_file


class TestPublishedTable(TestCase):

    def test_table(self):
        self.assertEqual(PAPER_RESULTS_SHA256, sha256_file(PAPER_RESULTS_PATH))
        table = load_results_table()
        self.assertEqual(25, len(table))
        self.assertEqual(TABLE_COLUMNS + ['n_params'], list(table.columns))
        self.assertEqual([6.5e6, 13.5e6, 24e6, 45.5e6, 93e6], sorted(table['n_params'].unique()))

    def test_size_labels(self):
        self.assertEqual(6.5e6, parse_size_label('6.5M'))
        self.assertEqual(2e9, parse_size_label(' 2b '))
        self.assertEqual(512.0, parse_size_label('512'))
        with self.assertRaises(DataError):
            parse_size_label('big')

    def test_missing_columns(self):
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'table.csv'
            path.write_text('size,flops\n6.5M,1e15\n', encoding='utf-8')
            with self.assertRaises(DataError):
                load_results_table(path)


class TestReproducedFits(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.report = reproduce_paper_fits()

    def test_front(self):
        front = self.report.front
        self.assertEqual(16, len(front))
        self.assertEqual(25, self.report.n_runs)
        self.assertTrue(np.all(np.diff(front['validation_loss']) < 0))
        self.assertIsNone(self.report.tradeoff)

    def test_loss_law(self):
        law = self.report.loss_law
        self.assertAlmostEqual(-0.2167, law.b, delta=0.005)
        self.assertLessEqual(law.rmse, 0.15)
        self.assertAlmostEqual(0.1047, law.predict(1.47e19), delta=0.2 * 0.1047)

    def test_accuracy_laws(self):
        predictions = self.report.predictions()
        self.assertAlmostEqual(0.787, predictions['acc_solved'], delta=0.05)
        self.assertTrue(values_look_equal(0.78703, predictions['acc_solved'], relative=1e-3))
        self.assertTrue(values_look_equal(0.97324, predictions['acc_r2'], relative=1e-3))
        self.assertGreater(predictions['acc_r2'], predictions['acc_solved'])
        self.assertEqual('acc_r2', self.report.faster_metric)
        self.assertAlmostEqual(0.1183, self.report.accuracy_laws['acc_solved'].exponent, delta=0.005)
        self.assertIn('fastest improving accuracy: acc_r2', self.report.describe())

    def test_metric_fronts(self):
        self.assertEqual({'validation_loss', 'acc_solved', 'acc_r2'}, set(self.report.metric_fronts))
        for metric in ('acc_solved', 'acc_r2'):
            self.assertTrue(np.all(np.diff(self.report.metric_fronts[metric][metric]) > 0))

    def test_save(self):
        with tempfile.TemporaryDirectory() as directory:
            self.report.save(directory)
            fits = json.loads((Path(directory) / FITS_FILE).read_text(encoding='utf-8'))
            front = pd.read_csv(Path(directory) / PARETO_FILE)
        self.assertEqual(16, fits['n_front'])
        self.assertEqual(16, len(front))
        self.assertEqual(3.8e21, fits['target_compute'])


class TestFitScalingTable(TestCase):

    def test_bad_tables(self):
        with self.assertRaises(DataError):
            fit_scaling_table(pd.DataFrame({'flops': [1.0]}))
        with self.assertRaises(DataError):
            fit_scaling_table(pd.DataFrame({'flops': [1.0], 'validation_loss': [np.nan]}))

    def test_tradeoff_from_token_counts(self):
        c = np.geomspace(1e15, 1e18, 6)
        frame = pd.DataFrame({'flops': c, 'validation_loss': 100.0 * c ** -0.1,
                              'n_params': 0.1 * c ** 0.5, 'tokens_out': 2.0 * c ** 0.45})
        report = fit_scaling_table(frame, budgets=[1e19])
        self.assertEqual(6, len(report.front))
        self.assertEqual({}, report.accuracy_laws)
        self.assertAlmostEqual(0.5, report.tradeoff.parameter_law.b, places=6)
        self.assertIn('N_opt', report.describe())


def write_run(directory, batch_size, learning_rate, losses, acc=(0.1, 0.3), size='custom'):
    directory.mkdir(parents=True)
    points = [EvalPoint(step=10 * (i + 1), tokens_in=1000 * (i + 1), tokens_out=100 * (i + 1),
                        flops=1e12 * (i + 1), train_loss=loss, validation_loss=loss, learning_rate=learning_rate)
              for i, loss in enumerate(losses)]
    record = RunRecord(size_label=size, config_digest='0' * 64,
                       config={'train': {'batch_size': batch_size, 'learning_rate': learning_rate,
                                         'token_ratio': 20.0}},
                       plan={'n_enc': 600, 'n_dec': 400, 'n_total': 1200}, points=points,
                       final_metrics={'acc_solved': acc[0], 'acc_r2': acc[1]})
    record.save(directory / RUN_RECORD_FILE)


class TestRunTables(TestCase):

    def setUp(self):
        self.temp = tempfile.TemporaryDirectory()
        self.root = Path(self.temp.name)
        for i, rate in enumerate((1e-4, 3e-4, 1e-3)):
            write_run(self.root / 'runs' / f'b8_lr{i}', 8, rate, [2.0, 1.5 - 0.1 * i])
            write_run(self.root / 'runs' / f'b16_lr{i}', 16, rate, [2.0, 1.4 - 0.05 * i])

    def tearDown(self):
        self.temp.cleanup()

    def test_load(self):
        self.assertEqual(6, len(find_run_records([self.root])))
        table = load_run_table([self.root / 'runs'])
        self.assertEqual(12, len(table))
        self.assertEqual(1000, table['n_params'].iloc[0])
        final = table[table['final']]
        self.assertEqual(6, len(final))
        self.assertTrue(final['acc_solved'].notna().all())
        self.assertTrue(table[~table['final']]['acc_solved'].isna().all())

    def test_missing(self):
        with self.assertRaises(DataError):
            find_run_records([self.root / 'nowhere'])
        empty = self.root / 'empty'
        empty.mkdir()
        with self.assertRaises(DataError):
            load_run_table([empty])

    def test_sweep_grid(self):
        grid = sweep_grid_from_table(load_run_table([self.root]))
        self.assertEqual([1000.0], grid.sizes())
        self.assertEqual([8, 16], grid.batch_sizes(1000.0))
        rates, losses = grid.row(1000.0, 8)
        self.assertEqual([1.3, 1.4, 1.5], sorted(np.round(losses, 6).tolist()))
        self.assertEqual(3, rates.size)


class TestPlots(TestCase):

    def test_written(self):
        report = reproduce_paper_fits()
        with tempfile.TemporaryDirectory() as directory:
            written = plot_scaling_report(report, load_results_table(), directory)
            written += plot_hparam_trends(optimal_hparams(quadratic_grid()), Path(directory) / 'hparams')
            written += plot_sweep_heatmap(quadratic_grid(), 1e6, Path(directory) / 'sweep')
            names = sorted(path.name for path in written)
            self.assertTrue(all(path.stat().st_size > 0 for path in written))
            series = pd.read_csv(Path(directory) / 'accuracy_vs_flops.csv')
        self.assertEqual(['accuracy_vs_flops.csv', 'accuracy_vs_flops.svg', 'hparams.csv', 'hparams.svg',
                          'loss_vs_flops.csv', 'loss_vs_flops.svg', 'sweep.csv', 'sweep.svg'], names)
        self.assertEqual(['flops', 'acc_solved', 'acc_r2'], list(series.columns))
        self.assertTrue(series[['acc_solved', 'acc_r2']].apply(lambda column: column.between(0, 1)).all().all())

    def test_repeatable_svg(self):
        report = reproduce_paper_fits()
        table = load_results_table()
        with tempfile.TemporaryDirectory() as first, tempfile.TemporaryDirectory() as second:
            plot_scaling_report(report, table, first)
            plot_scaling_report(report, table, second)
            self.assertEqual(sha256_file(Path(first) / 'loss_vs_flops.svg'),
                             sha256_file(Path(second) / 'loss_vs_flops.svg'))
