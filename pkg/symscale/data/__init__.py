__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


from symscale.data.constants import insert_constants
from symscale.data.mixtures import MixtureSpec, haar_rotation, sample_input_dataset, sample_mixture_spec
from symscale.data.pairs import ExprDatasetPair, Rejection, pair_seed, sample_pair
