__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


import json
import tempfile
from unittest import TestCase

import numpy as np

from symscale.exceptions import ConfigError
from symscale.expressions.canonical import canonicalize
from symscale.expressions.generator import STATS_FILE, ExpressionSet, build_expression_set, count_candidates, \
    generate_level, read_config_digest
from symscale.expressions.tree import BINARY_OPS, UNARY_OPS, Binary, Unary, evaluate_batch, swap_variables


LEVEL_ONE = {
    'exp(x1)', 'exp(x2)', 'sin(x1)', 'sin(x2)', 'sqrt(x1)', 'sqrt(x2)',
    'x1 + x2', 'x1 - x2', 'x1^2', 'x1*x2', 'x2^2', 'x1/x2', 'x2/x1',
}


FINGERPRINT_POINTS = np.random.default_rng(11).uniform(0.3, 2.0, (24, 2)) * \
    np.random.default_rng(12).choice([-1.0, 1.0], (24, 2))


def fingerprint(expr):
    """
    Values on fixed points with mixed signs, normalized so that a*f + b and f
    agree. None for expressions that are constant wherever they are defined.
    """
    values = evaluate_batch(expr, FINGERPRINT_POINTS)
    finite = np.isfinite(values)
    kept = values[finite]
    if len(kept) < 2:
        return None
    spread = kept.std()
    if spread <= 1e-9 * (1.0 + np.abs(kept).max()):
        return None
    scaled = (kept - kept.mean()) / spread
    if scaled[np.argmax(np.abs(scaled) > 1e-6)] < 0:
        scaled = -scaled
    return tuple(finite), tuple(np.round(scaled, 5) + 0.0)


def level_two_by_values(levels):
    """
    Classes of new level-2 functions, deduplicated by value on fixed points
    instead of by canonical string.
    """
    known = {fingerprint(form.expression) for level in levels for form in level}
    previous = [form.expression for form in levels[1]]
    lower = [form.expression for level in levels for form in level]
    trees = [Unary(op, child) for op in UNARY_OPS for child in previous]
    trees += [Binary(op, a, b) for op in BINARY_OPS for a in previous for b in lower]
    trees += [Binary(op, b, a) for op in BINARY_OPS for a in previous for b in lower]
    found = {fingerprint(tree) for tree in trees}
    return found - known - {None}


class TestGenerator(TestCase):

    def test_level_one(self):
        expression_set = build_expression_set(n_vars=2, max_depth=1, threshold=100)
        self.assertEqual(['x1', 'x2'], [form.string for form in expression_set.levels[0]])
        self.assertEqual(LEVEL_ONE, {form.string for form in expression_set.levels[1]})
        self.assertEqual(15, len(expression_set))
        stats = expression_set.stats.levels[0]
        self.assertEqual(40, stats.candidates)
        self.assertEqual(8, stats.constants_dropped)
        self.assertEqual(13, stats.unique)
        self.assertEqual(19, stats.duplicates)
        self.assertFalse(stats.sampled)

    def test_level_strings_sorted(self):
        expression_set = build_expression_set(n_vars=2, max_depth=1, threshold=100)
        strings = [form.string for form in expression_set.levels[1]]
        self.assertEqual(sorted(strings), strings)

    def test_level_two_matches_set_construction(self):
        expression_set = build_expression_set(n_vars=2, max_depth=1, threshold=100)
        self.assertEqual(4 * 13 + 2 * 4 * 13 * 15, count_candidates(expression_set.levels, 2))
        level_two = generate_level(expression_set, 2)
        strings = [form.string for form in level_two]
        self.assertEqual(len(strings), len(set(strings)))
        values = [fingerprint(form.expression) for form in level_two]
        self.assertNotIn(None, values)
        self.assertEqual(level_two_by_values(expression_set.levels), set(values))
        # prior is untouched
        self.assertEqual(15, len(expression_set.index))

    def test_complete_levels_closed_under_variable_swap(self):
        expression_set = build_expression_set(n_vars=2, max_depth=2, threshold=10 ** 6)
        self.assertFalse(any(stats.sampled for stats in expression_set.stats.levels))
        for level in expression_set.levels:
            strings = {form.string for form in level}
            swapped = {canonicalize(swap_variables(form.expression, {1: 2, 2: 1})).string for form in level}
            self.assertEqual(strings, swapped)

    def test_threshold_sampling(self):
        full = build_expression_set(n_vars=2, max_depth=2, threshold=10 ** 6)
        sampled = build_expression_set(n_vars=2, max_depth=2, threshold=40, seed=7)
        again = build_expression_set(n_vars=2, max_depth=2, threshold=40, seed=7)
        other = build_expression_set(n_vars=2, max_depth=2, threshold=40, seed=8)
        self.assertEqual(40, len(sampled))
        self.assertEqual(25, len(sampled.levels[2]))
        self.assertTrue(sampled.stats.levels[-1].sampled)
        self.assertEqual([f.string for f in sampled], [f.string for f in again])
        self.assertNotEqual([f.string for f in sampled], [f.string for f in other])
        self.assertTrue({f.string for f in sampled.levels[2]} <= {f.string for f in full.levels[2]})

    def test_threshold_inside_a_level(self):
        expression_set = build_expression_set(n_vars=2, max_depth=3, threshold=10, seed=1)
        self.assertEqual(10, len(expression_set))
        self.assertEqual(2, len(expression_set.levels))

    def test_save_load(self):
        expression_set = build_expression_set(n_vars=2, max_depth=1, threshold=100)
        with tempfile.TemporaryDirectory() as directory:
            expression_set.save(directory, config_digest='abc')
            loaded = ExpressionSet.load(directory)
            self.assertEqual('abc', read_config_digest(directory))
            with open(f'{directory}/{STATS_FILE}', 'r', encoding='utf-8') as f:
                self.assertEqual([2, 13], json.load(f)['level_sizes'])
        self.assertEqual([[f.string for f in level] for level in expression_set.levels],
                         [[f.string for f in level] for level in loaded.levels])
        self.assertEqual(expression_set.index, loaded.index)
        self.assertEqual(40, loaded.stats.candidates)

    def test_bad_arguments(self):
        with self.assertRaises(ConfigError):
            build_expression_set(n_vars=2, max_depth=0, threshold=100)
        with self.assertRaises(ConfigError):
            build_expression_set(n_vars=2, max_depth=1, threshold=1)
        with self.assertRaises(ValueError):
            generate_level(ExpressionSet(2, 100), 0)
        with self.assertRaises(ValueError):
            generate_level(ExpressionSet(2, 100), 2)
