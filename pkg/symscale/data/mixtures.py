"""Gaussian/uniform mixture inputs with a shared random rotation.

A dataset is drawn in three steps: choose the cluster count and Dirichlet
weights, draw per-cluster centroids, per-dimension scales and a shape, then
draw the points and rotate all of them by one Haar-distributed rotation
(``y = R x``, so a cluster's covariance becomes ``R diag(s^2) R^T``).
Uniform clusters span ``centroid ± scale*sqrt(3)``, which matches the
variance of the Gaussian shape.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from dataclasses import dataclass
from enum import Enum
from typing import Tuple

# third-party imports
import numpy as np
from scipy import linalg


UNIFORM_HALF_WIDTH: float = float(np.sqrt(3.0))


class ClusterShape(str, Enum):
    GAUSSIAN = 'gaussian'
    UNIFORM = 'uniform'


@dataclass(frozen=True)
class MixtureSpec:
    weights: np.ndarray
    centroids: np.ndarray
    scales: np.ndarray
    shapes: Tuple[ClusterShape, ...]
    rotation: np.ndarray

    @property
    def n_clusters(self) -> int:
        return len(self.weights)

    @property
    def n_vars(self) -> int:
        return self.rotation.shape[0]

    def covariance(self, cluster: int) -> np.ndarray:
        """
        Covariance of one rotated cluster.
        """
        return self.rotation @ np.diag(self.scales[cluster] ** 2) @ self.rotation.T


def haar_rotation(d: int, rng: np.random.Generator) -> np.ndarray:
    """
    Haar-distributed rotation in SO(d).

    QR of a standard normal matrix, with the columns of Q multiplied by the
    signs of R's diagonal; one column is flipped if the determinant is -1.
    """
    if d < 1:
        raise ValueError(f'dimension must be >= 1, got {d}')
    q, r = linalg.qr(rng.standard_normal((d, d)))
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    q = q * signs
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def sample_mixture_spec(n_vars: int, max_clusters: int, rng: np.random.Generator) -> MixtureSpec:
    n_clusters = int(rng.integers(1, max_clusters + 1))
    weights = rng.dirichlet(np.ones(n_clusters))
    centroids = rng.standard_normal((n_clusters, n_vars))
    # uniform on (0, 1]
    scales = 1.0 - rng.random((n_clusters, n_vars))
    shapes = tuple(ClusterShape.UNIFORM if coin < 0.5 else ClusterShape.GAUSSIAN
                   for coin in rng.random(n_clusters))
    rotation = haar_rotation(n_vars, rng)
    return MixtureSpec(weights=weights, centroids=centroids, scales=scales, shapes=shapes, rotation=rotation)


def sample_from_spec(spec: MixtureSpec, n_points: int, rng: np.random.Generator) -> np.ndarray:
    """
    Draw ``n_points`` rows from a mixture; rows come back shuffled.
    """
    counts = rng.multinomial(n_points, spec.weights)
    blocks = []
    for cluster, count in enumerate(counts):
        if count == 0:
            continue
        shape = (int(count), spec.n_vars)
        if spec.shapes[cluster] is ClusterShape.GAUSSIAN:
            noise = rng.standard_normal(shape)
        else:
            noise = rng.uniform(-UNIFORM_HALF_WIDTH, UNIFORM_HALF_WIDTH, shape)
        blocks.append(spec.centroids[cluster] + spec.scales[cluster] * noise)
    points = np.concatenate(blocks, axis=0) @ spec.rotation.T
    return points[rng.permutation(n_points)]


def sample_input_dataset(
    n_points: int = 64,
    n_vars: int = 2,
    max_clusters: int = 5,
    rng: np.random.Generator = None,
) -> np.ndarray:
    """
    Sample an (n_points, n_vars) input matrix from a fresh random mixture.
    """
    if n_points < 1:
        raise ValueError(f'n_points must be >= 1, got {n_points}')
    if rng is None:
        rng = np.random.default_rng()
    spec = sample_mixture_spec(n_vars, max_clusters, rng)
    return sample_from_spec(spec, n_points, rng)
