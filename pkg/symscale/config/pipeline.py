"""Pipeline configuration.

One JSON document configures every stage. The schema is strict: unknown keys,
missing keys and wrongly typed values are all reported together in a single
``ConfigError``. ``dumps_config`` writes the canonical form (sorted keys,
two-space indent, trailing newline), and loading a canonical document then
dumping it reproduces the input byte for byte.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import json
from dataclasses import asdict, dataclass, field, fields, is_dataclass, replace
from hashlib import sha256
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union, get_args, get_origin, get_type_hints

# symscale
from symscale import get_module_path, get_seed_override
from symscale.exceptions import ConfigError


MODEL_SIZE_LABELS = ('6.5M', '13.5M', '24M', '45.5M', '93M', 'custom')
SUBLAYERS = ('column', 'row')

# artifact stage -> config sections its outputs depend on
STAGE_SECTIONS: Dict[str, Sequence[str]] = {
    'expressions': ('seed', 'data'),
    'corpus': ('seed', 'data'),
    'train': ('seed', 'data', 'model', 'train'),
    'evaluate': ('seed', 'data', 'model', 'train', 'eval'),
}


@dataclass
class DataConfig:
    n_vars: int = 2
    max_depth: int = 3
    expression_count: int = 100000
    pairs_per_expression: int = 3600
    constant_probability: float = 0.2
    constant_range: List[int] = field(default_factory=lambda: [-9, 9])
    n_points: int = 64
    max_clusters: int = 5
    retries: int = 5
    node_cap: int = 512
    validation_expressions: int = 1000
    test_expressions: int = 1000
    shard_size: int = 100000
    max_output_length: int = 256


@dataclass
class ModelSection:
    size: str = '6.5M'
    dim: Optional[int] = None
    encoder_layers: Optional[int] = None
    decoder_layers: Optional[int] = None
    heads: Optional[int] = None
    mlp_dim: Optional[int] = None
    residual_dropout: float = 0.1
    attention_dropout: float = 0.1
    init_scale: float = 0.02
    layer_norm_eps: float = 1e-05
    sublayer_order: List[str] = field(default_factory=lambda: ['column', 'row'])


@dataclass
class TrainConfig:
    batch_size: int = 32
    learning_rate: float = 0.00046
    token_ratio: float = 20.0
    warmup_fraction: float = 0.05
    decay_floor: float = 0.01
    clip_value: float = 1.0
    weight_decay: float = 0.1
    beta1: float = 0.9
    beta2: float = 0.98
    eps: float = 1e-09
    eval_points: int = 20
    eval_batch_size: int = 64
    max_steps: Optional[int] = None
    deterministic: bool = True


@dataclass
class EvalConfig:
    n_candidates: int = 128
    seeds: List[int] = field(default_factory=lambda: [0, 1, 2])
    temperature: float = 1.0
    split: str = 'test'
    limit: Optional[int] = None


@dataclass
class AnalysisConfig:
    n_bins: int = 1500
    offset: bool = False
    target_compute: float = 3.8e+21


@dataclass
class PipelineConfig:
    seed: int = 0
    output_dir: str = 'runs'
    data: DataConfig = field(default_factory=DataConfig)
    model: ModelSection = field(default_factory=ModelSection)
    train: TrainConfig = field(default_factory=TrainConfig)
    eval: EvalConfig = field(default_factory=EvalConfig)
    analysis: AnalysisConfig = field(default_factory=AnalysisConfig)

    def validate(self) -> 'PipelineConfig':
        problems = list(_check_values(self))
        if problems:
            raise ConfigError('invalid config:\n  - ' + '\n  - '.join(problems))
        return self


# -----------------------------------------------------------------------------
# Strict schema
# -----------------------------------------------------------------------------


def _coerce(tp: Any, value: Any, path: str, problems: List[str]) -> Any:
    if is_dataclass(tp):
        return _build(tp, value, path, problems)
    origin = get_origin(tp)
    if origin is Union:
        if value is None:
            return None
        inner = [arg for arg in get_args(tp) if arg is not type(None)][0]
        return _coerce(inner, value, path, problems)
    if origin in (list, List):
        if not isinstance(value, list):
            problems.append(f'{path}: expected a list, got {type(value).__name__}')
            return None
        item_type = get_args(tp)[0]
        return [_coerce(item_type, item, f'{path}[{i}]', problems) for i, item in enumerate(value)]
    if tp is bool:
        if not isinstance(value, bool):
            problems.append(f'{path}: expected a boolean, got {value!r}')
        return value
    if tp is int:
        if isinstance(value, bool) or not isinstance(value, int):
            problems.append(f'{path}: expected an integer, got {value!r}')
        return value
    if tp is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            problems.append(f'{path}: expected a number, got {value!r}')
            return value
        return float(value)
    if tp is str:
        if not isinstance(value, str):
            problems.append(f'{path}: expected a string, got {value!r}')
        return value
    problems.append(f'{path}: unsupported schema type {tp!r}')
    return value


def _build(cls, payload: Any, path: str, problems: List[str]):
    if not isinstance(payload, dict):
        problems.append(f'{path or "config"}: expected an object, got {type(payload).__name__}')
        return None
    hints = get_type_hints(cls)
    names = [f.name for f in fields(cls)]
    prefix = f'{path}.' if path else ''
    for key in sorted(set(payload) - set(names)):
        problems.append(f'{prefix}{key}: unknown key')
    for key in names:
        if key not in payload:
            problems.append(f'{prefix}{key}: missing key')
    values = {name: _coerce(hints[name], payload[name], f'{prefix}{name}', problems)
              for name in names if name in payload}
    if problems:
        return None
    return cls(**values)


def _check_values(config: PipelineConfig):
    data, model, train, evaluation, analysis = config.data, config.model, config.train, config.eval, config.analysis
    if config.seed < 0:
        yield 'seed must be >= 0'
    if data.n_vars < 1:
        yield 'data.n_vars must be >= 1'
    if data.max_depth < 1:
        yield 'data.max_depth must be >= 1'
    if data.expression_count < data.n_vars:
        yield 'data.expression_count must be >= data.n_vars'
    if not 0.0 <= data.constant_probability <= 1.0:
        yield 'data.constant_probability must lie in [0, 1]'
    if len(data.constant_range) != 2 or data.constant_range[0] >= data.constant_range[1]:
        yield 'data.constant_range must be [low, high] with low < high'
    for name in ('pairs_per_expression', 'n_points', 'max_clusters', 'retries', 'node_cap',
                 'validation_expressions', 'test_expressions', 'shard_size', 'max_output_length'):
        if getattr(data, name) < 1:
            yield f'data.{name} must be >= 1'
    if model.size not in MODEL_SIZE_LABELS:
        yield f'model.size must be one of {", ".join(MODEL_SIZE_LABELS)}'
    dims = ('dim', 'encoder_layers', 'decoder_layers', 'heads', 'mlp_dim')
    if model.size == 'custom':
        for name in dims:
            value = getattr(model, name)
            if value is None or value < (0 if name.endswith('layers') else 1):
                yield f'model.{name} is required for a custom model size'
        if model.dim and model.heads and model.dim % model.heads:
            yield 'model.dim must be divisible by model.heads'
    elif any(getattr(model, name) is not None for name in dims):
        yield 'model dimensions must be null unless model.size is "custom"'
    if sorted(model.sublayer_order) != sorted(SUBLAYERS):
        yield 'model.sublayer_order must be a permutation of ["column", "row"]'
    for name in ('residual_dropout', 'attention_dropout'):
        if not 0.0 <= getattr(model, name) < 1.0:
            yield f'model.{name} must lie in [0, 1)'
    for name in ('batch_size', 'learning_rate', 'token_ratio', 'clip_value', 'eps', 'eval_points', 'eval_batch_size'):
        if getattr(train, name) <= 0:
            yield f'train.{name} must be positive'
    if not 0.0 < train.warmup_fraction < 1.0:
        yield 'train.warmup_fraction must lie in (0, 1)'
    if not 0.0 < train.decay_floor <= 1.0:
        yield 'train.decay_floor must lie in (0, 1]'
    if train.weight_decay < 0:
        yield 'train.weight_decay must be >= 0'
    if not (0.0 <= train.beta1 < 1.0 and 0.0 <= train.beta2 < 1.0):
        yield 'train.beta1 and train.beta2 must lie in [0, 1)'
    if train.max_steps is not None and train.max_steps < 1:
        yield 'train.max_steps must be >= 1 or null'
    if evaluation.n_candidates < 1:
        yield 'eval.n_candidates must be >= 1'
    if not evaluation.seeds:
        yield 'eval.seeds must not be empty'
    if evaluation.temperature < 0:
        yield 'eval.temperature must be >= 0'
    if evaluation.split not in ('validation', 'test'):
        yield 'eval.split must be "validation" or "test"'
    if evaluation.limit is not None and evaluation.limit < 1:
        yield 'eval.limit must be >= 1 or null'
    if analysis.n_bins < 1:
        yield 'analysis.n_bins must be >= 1'
    if analysis.target_compute <= 0:
        yield 'analysis.target_compute must be positive'


# -----------------------------------------------------------------------------
# Loading, dumping, hashing
# -----------------------------------------------------------------------------


def loads_config(text: str) -> PipelineConfig:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as decode_error:
        raise ConfigError(f'config is not valid JSON: {decode_error}') from decode_error
    problems: List[str] = []
    config = _build(PipelineConfig, payload, '', problems)
    if problems:
        raise ConfigError('invalid config:\n  - ' + '\n  - '.join(problems))
    return config.validate()


def load_config(path: Union[Path, str]) -> PipelineConfig:
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return loads_config(f.read())
    except FileNotFoundError as missing:
        raise ConfigError(f'config file not found: {path}') from missing


def dumps_config(config: PipelineConfig) -> str:
    return json.dumps(asdict(config), indent=2, sort_keys=True) + '\n'


def save_config(config: PipelineConfig, path: Union[Path, str]) -> None:
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(dumps_config(config))


def get_config_path(name: str) -> Path:
    return Path(get_module_path()) / 'config' / 'data' / f'{name}.json'


def default_config() -> PipelineConfig:
    """
    Configuration with the published data, model and training settings.
    """
    return load_config(get_config_path('default'))


def toy_config() -> PipelineConfig:
    """
    Desk-scale configuration used by the end-to-end checks.
    """
    return load_config(get_config_path('toy'))


def config_digest(config: PipelineConfig, sections: Sequence[str]) -> str:
    """
    sha256 over the canonical JSON of the named sections.
    """
    payload = asdict(config)
    selected = {name: payload[name] for name in sections}
    text = json.dumps(selected, sort_keys=True, separators=(',', ':'))
    return sha256(text.encode('utf-8')).hexdigest()


def stage_digest(config: PipelineConfig, stage: str) -> str:
    return config_digest(config, STAGE_SECTIONS[stage])


def with_overrides(config: PipelineConfig, section: Optional[str] = None, **values) -> PipelineConfig:
    """
    Return a copy with fields replaced; ``None`` values are ignored.
    """
    values = {key: value for key, value in values.items() if value is not None}
    if not values:
        return config
    if section is None:
        return replace(config, **values).validate()
    updated = replace(getattr(config, section), **values)
    return replace(config, **{section: updated}).validate()


def apply_environment(config: PipelineConfig) -> PipelineConfig:
    """
    Apply the SYMSCALE_SEED override, if set.
    """
    seed = get_seed_override()
    if seed is None:
        return config
    return replace(config, seed=seed)
