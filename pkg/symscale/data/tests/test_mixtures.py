__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


from unittest import TestCase

import numpy as np
from scipy import stats

from symscale.data.mixtures import ClusterShape, MixtureSpec, haar_rotation, sample_from_spec, \
    sample_input_dataset, sample_mixture_spec


class TestHaarRotation(TestCase):

    def test_special_orthogonal(self):
        rng = np.random.default_rng(0)
        for d in range(1, 6):
            for _ in range(10):
                q = haar_rotation(d, rng)
                np.testing.assert_allclose(q.T @ q, np.eye(d), atol=1e-10)
                self.assertAlmostEqual(1.0, float(np.linalg.det(q)), places=10)

    def test_planar_angle_uniform(self):
        rng = np.random.default_rng(1)
        angles = [np.arctan2(q[1, 0], q[0, 0]) for q in (haar_rotation(2, rng) for _ in range(3000))]
        result = stats.kstest(angles, stats.uniform(loc=-np.pi, scale=2 * np.pi).cdf)
        self.assertGreater(result.pvalue, 1e-3)

    def test_bad_dimension(self):
        with self.assertRaises(ValueError):
            haar_rotation(0, np.random.default_rng(0))


class TestMixtures(TestCase):

    def test_spec_ranges(self):
        rng = np.random.default_rng(2)
        counts = set()
        for _ in range(200):
            spec = sample_mixture_spec(3, 5, rng)
            counts.add(spec.n_clusters)
            self.assertAlmostEqual(1.0, float(spec.weights.sum()))
            self.assertTrue(np.all((spec.scales > 0) & (spec.scales <= 1)))
            self.assertEqual(3, spec.n_vars)
        self.assertEqual({1, 2, 3, 4, 5}, counts)

    def test_cluster_moments(self):
        rotation = haar_rotation(2, np.random.default_rng(3))
        for shape in ClusterShape:
            spec = MixtureSpec(weights=np.array([1.0]), centroids=np.array([[1.0, -2.0]]),
                               scales=np.array([[0.5, 1.0]]), shapes=(shape,), rotation=rotation)
            points = sample_from_spec(spec, 40000, np.random.default_rng(4))
            np.testing.assert_allclose(points.mean(axis=0), rotation @ np.array([1.0, -2.0]), atol=0.03)
            np.testing.assert_allclose(np.cov(points.T), spec.covariance(0), atol=0.03)

    def test_dataset(self):
        points = sample_input_dataset(64, 2, 5, np.random.default_rng(9))
        self.assertEqual((64, 2), points.shape)
        np.testing.assert_array_equal(points, sample_input_dataset(64, 2, 5, np.random.default_rng(9)))
        with self.assertRaises(ValueError):
            sample_input_dataset(0, 2, 5, np.random.default_rng(9))
