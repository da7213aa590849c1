"""Model dimensions and the named size grid.

The five named sizes share a head dimension of 64 and an MLP width of four
times the model dimension. ``count_parameters`` is analytic, so budgets can be
planned without building a model.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
from dataclasses import asdict, dataclass
from typing import Dict, NamedTuple, Tuple

# symscale
from symscale.config.pipeline import ModelSection
from symscale.exceptions import ConfigError
from symscale.tokens.latex_tokens import MAX_OUTPUT_LENGTH
from symscale.tokens.values import MAX_EXPONENT, MIN_EXPONENT


N_EXPONENTS: int = MAX_EXPONENT - MIN_EXPONENT + 1


class ModelSize(NamedTuple):
    dim: int
    layers: int
    heads: int
    mlp_dim: int
    published_total: float


MODEL_SIZES: Dict[str, ModelSize] = {
    '6.5M': ModelSize(256, 3, 4, 1024, 6.48e6),
    '13.5M': ModelSize(320, 4, 5, 1280, 13.40e6),
    '24M': ModelSize(384, 5, 6, 1536, 24.01e6),
    '45.5M': ModelSize(448, 7, 7, 1792, 45.53e6),
    '93M': ModelSize(512, 11, 8, 2048, 93.08e6),
}


@dataclass(frozen=True)
class ModelConfig:
    dim: int
    encoder_layers: int
    decoder_layers: int
    heads: int
    mlp_dim: int
    vocab_size: int
    n_vars: int = 2
    max_output_length: int = MAX_OUTPUT_LENGTH
    residual_dropout: float = 0.1
    attention_dropout: float = 0.1
    init_scale: float = 0.02
    layer_norm_eps: float = 1e-5
    sublayer_order: Tuple[str, ...] = ('column', 'row')
    size_label: str = 'custom'

    def __post_init__(self):
        if min(self.dim, self.heads, self.mlp_dim, self.vocab_size, self.n_vars, self.max_output_length) < 1:
            raise ConfigError(f'model dimensions must be positive: {self}')
        if min(self.encoder_layers, self.decoder_layers) < 0:
            raise ConfigError('layer counts must be >= 0')
        if self.dim % self.heads:
            raise ConfigError(f'dim {self.dim} is not divisible by {self.heads} heads')
        if sorted(self.sublayer_order) != ['column', 'row']:
            raise ConfigError(f'bad sublayer order {self.sublayer_order}')

    @property
    def head_dim(self) -> int:
        return self.dim // self.heads

    def to_dict(self) -> Dict:
        payload = asdict(self)
        payload['sublayer_order'] = list(self.sublayer_order)
        return payload

    @classmethod
    def from_dict(cls, payload: Dict) -> 'ModelConfig':
        payload = dict(payload)
        payload['sublayer_order'] = tuple(payload['sublayer_order'])
        return cls(**payload)


def size_config(label: str, vocab_size: int, n_vars: int = 2, **overrides) -> ModelConfig:
    """
    ModelConfig of a named size.
    """
    try:
        size = MODEL_SIZES[label]
    except KeyError as key_error:
        raise ConfigError(f'unknown model size {label!r}; expected one of {", ".join(MODEL_SIZES)}') from key_error
    return ModelConfig(dim=size.dim, encoder_layers=size.layers, decoder_layers=size.layers,
                       heads=size.heads, mlp_dim=size.mlp_dim, vocab_size=vocab_size,
                       n_vars=n_vars, size_label=label, **overrides)


def model_config_from_section(section: ModelSection, vocab_size: int, n_vars: int,
                              max_output_length: int = MAX_OUTPUT_LENGTH) -> ModelConfig:
    common = dict(
        max_output_length=max_output_length,
        residual_dropout=section.residual_dropout,
        attention_dropout=section.attention_dropout,
        init_scale=section.init_scale,
        layer_norm_eps=section.layer_norm_eps,
        sublayer_order=tuple(section.sublayer_order),
    )
    if section.size != 'custom':
        return size_config(section.size, vocab_size, n_vars, **common)
    return ModelConfig(dim=section.dim, encoder_layers=section.encoder_layers,
                       decoder_layers=section.decoder_layers, heads=section.heads,
                       mlp_dim=section.mlp_dim, vocab_size=vocab_size, n_vars=n_vars, **common)


class ParameterCount(NamedTuple):
    total: int
    encoder: int
    decoder: int

    @property
    def feed_forward(self) -> int:
        return self.encoder + self.decoder


def count_parameters(config: ModelConfig) -> ParameterCount:
    """
    Returns:
        (N_total, N_enc, N_dec). N_enc and N_dec count the attention and MLP
        weights and biases of the encoder and decoder layers; N_total also
        counts embeddings, layer norms and the output head.
    """
    d, m, v = config.dim, config.mlp_dim, config.vocab_size
    attention = 4 * d * d + 4 * d
    mlp = 2 * d * m + m + d
    norm = 2 * d
    n_enc = config.encoder_layers * (2 * attention + mlp)
    n_dec = config.decoder_layers * (2 * attention + mlp)
    norms = 3 * norm * (config.encoder_layers + config.decoder_layers) + 2 * norm
    embeddings = 2 * d + N_EXPONENTS * d + (config.n_vars + 1) * d + v * d + config.max_output_length * d
    head = d * v + v
    return ParameterCount(n_enc + n_dec + norms + embeddings + head, n_enc, n_dec)
