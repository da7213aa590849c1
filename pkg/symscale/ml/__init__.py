__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


from symscale.ml.model import SymbolicTransformer, sequence_loss
from symscale.ml.model_config import MODEL_SIZES, ModelConfig, count_parameters, size_config
from symscale.ml.schedule import lr_schedule
