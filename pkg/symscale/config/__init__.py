__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


from symscale.config.pipeline import (
    AnalysisConfig, DataConfig, EvalConfig, ModelSection, PipelineConfig, TrainConfig,
    apply_environment, config_digest, default_config, dumps_config, load_config, loads_config,
    save_config, stage_digest, toy_config, with_overrides,
)
