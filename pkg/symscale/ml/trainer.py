"""Budget-driven training runs.

The output-token budget is ``token_ratio * (N_enc + N_dec)``. A dry pass over
the seeded batch stream converts the budget into a step count, so the
schedule knows its length before the first step. Validation loss is measured
at ``eval_points`` evenly spaced steps; each eval point is appended to
``runs.jsonl`` and followed by a checkpoint. Resuming restores the model, the
optimizer, the batch stream position, the token counters and the torch RNG,
and continues the interrupted run step for step.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import json
import logging
import math
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

# third-party imports
import numpy as np
import torch
from tqdm import tqdm

# symscale
from symscale.config.pipeline import PipelineConfig, dumps_config, stage_digest
from symscale.data.corpus import Corpus
from symscale.exceptions import ArtifactHashError, DataError
from symscale.ml.batching import BatchStream, EncodedPair, collate, encode_pairs
from symscale.ml.checkpoint import Checkpoint, load_checkpoint, save_checkpoint
from symscale.ml.model import SymbolicTransformer, decay_parameter_names, sequence_loss
from symscale.ml.model_config import ModelConfig, count_parameters, model_config_from_section
from symscale.ml.optimizer import DecoupledAdam
from symscale.ml.schedule import lr_schedule
from symscale.scaling.flops import training_flops
from symscale.tokens.vocabulary import Vocabulary, build_vocabulary
from symscale.utils.system import system_snapshot


logging.basicConfig(
    format='[symscale][%(asctime)s][%(levelname)s]: %(message)s',
    level=logging.INFO
)
LOGGER: logging.Logger = logging.getLogger(__name__)

RUNS_FILE: str = 'runs.jsonl'
RUN_RECORD_FILE: str = 'run_record.json'
CHECKPOINT_FILE: str = 'checkpoint.pt'
VOCABULARY_FILE: str = 'vocabulary.json'
CONFIG_FILE: str = 'config.json'


@dataclass
class EvalPoint:
    step: int
    tokens_in: int
    tokens_out: int
    flops: float
    train_loss: float
    validation_loss: float
    learning_rate: float


@dataclass
class TrainingPlan:
    total_steps: int
    token_budget: float
    n_total: int
    n_enc: int
    n_dec: int
    eval_steps: List[int]
    tokens_in: int
    tokens_out: int
    flops: float
    epochs: float

    def to_dict(self) -> Dict:
        return asdict(self)


@dataclass
class RunRecord:
    size_label: str
    config_digest: str
    config: Dict
    plan: Dict
    points: List[EvalPoint] = field(default_factory=list)
    final_metrics: Dict[str, float] = field(default_factory=dict)
    system: Dict = field(default_factory=dict)

    def to_dict(self) -> Dict:
        return asdict(self)

    def save(self, path: Union[Path, str]) -> None:
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(json.dumps(self.to_dict(), indent=2, sort_keys=True) + '\n')

    @classmethod
    def load(cls, path: Union[Path, str]) -> 'RunRecord':
        with open(path, 'r', encoding='utf-8') as f:
            payload = json.load(f)
        payload['points'] = [EvalPoint(**point) for point in payload['points']]
        return cls(**payload)


def eval_steps(total_steps: int, n_points: int = 20) -> List[int]:
    """
    ``n_points`` evenly spaced steps ending at ``total_steps`` (fewer when
    the run is shorter than ``n_points`` steps).
    """
    steps = np.round(np.linspace(total_steps / n_points, total_steps, n_points)).astype(int)
    return sorted(set(int(step) for step in steps if step >= 1))


def plan_training(
    config: PipelineConfig,
    output_token_counts: Sequence[int],
    model_config: ModelConfig,
) -> TrainingPlan:
    """
    Walk the batch stream without training to find the step count that
    reaches the output-token budget (or ``max_steps`` when set).
    """
    counts = np.asarray(output_token_counts, dtype=np.int64)
    train = config.train
    n_total, n_enc, n_dec = count_parameters(model_config)
    budget = train.token_ratio * (n_enc + n_dec)
    cells_per_step = train.batch_size * config.data.n_points * (model_config.n_vars + 1)
    stream = BatchStream(len(counts), train.batch_size, config.seed, log_epochs=False)
    steps, tokens_out = 0, 0
    while (tokens_out < budget) if train.max_steps is None else (steps < train.max_steps):
        tokens_out += int(counts[stream.next_indices()].sum())
        steps += 1
    tokens_in = steps * cells_per_step
    return TrainingPlan(
        total_steps=steps,
        token_budget=budget,
        n_total=n_total,
        n_enc=n_enc,
        n_dec=n_dec,
        eval_steps=eval_steps(steps, train.eval_points),
        tokens_in=tokens_in,
        tokens_out=tokens_out,
        flops=training_flops(n_enc, n_dec, tokens_in, tokens_out),
        epochs=stream.position / len(counts),
    )


@torch.no_grad()
def validation_loss(model: SymbolicTransformer, items: Sequence[EncodedPair], pad_id: int, batch_size: int = 64) -> float:
    """
    Mean token cross-entropy over a split.
    """
    if not items:
        raise DataError('validation split is empty')
    was_training = model.training
    model.eval()
    total, count = 0.0, 0
    for start in range(0, len(items), batch_size):
        batch = collate(items[start:start + batch_size], pad_id)
        logits = model(batch.mantissas, batch.exponents, batch.decoder_inputs)
        total += float(sequence_loss(logits, batch.labels, pad_id, reduction='sum'))
        count += int((batch.labels != pad_id).sum())
    if was_training:
        model.train()
    return total / count


class Trainer:
    def __init__(
        self,
        config: PipelineConfig,
        corpus: Corpus,
        out_dir: Union[Path, str],
        force: bool = False,
        progress: bool = False,
    ) -> None:
        self.config = config
        self.corpus = corpus
        self.out_dir = Path(out_dir)
        self.force = force
        self.progress = progress
        self.digest = stage_digest(config, 'train')
        self.vocabulary: Vocabulary = build_vocabulary(corpus.n_vars)
        self.model_config: ModelConfig = model_config_from_section(
            config.model, len(self.vocabulary), corpus.n_vars, config.data.max_output_length)
        max_length = config.data.max_output_length
        self.train_items = encode_pairs(corpus.pairs('train'), self.vocabulary, max_length)
        self.validation_items = encode_pairs(corpus.pairs('validation'), self.vocabulary, max_length)
        if not self.train_items:
            raise DataError('training split is empty')
        self._plan: Optional[TrainingPlan] = None

    def plan(self) -> TrainingPlan:
        if self._plan is None:
            self._plan = plan_training(self.config, [item.n_output_tokens for item in self.train_items],
                                       self.model_config)
        return self._plan

    def _record(self, points: List[EvalPoint]) -> RunRecord:
        return RunRecord(
            size_label=self.config.model.size,
            config_digest=self.digest,
            config=json.loads(dumps_config(self.config)),
            plan=self.plan().to_dict(),
            points=points,
        )

    def _write_points(self, points: Sequence[EvalPoint]) -> None:
        with open(self.out_dir / RUNS_FILE, 'w', encoding='utf-8', newline='\n') as f:
            for point in points:
                f.write(json.dumps(dict(asdict(point), config_digest=self.digest, size=self.config.model.size),
                                   sort_keys=True) + '\n')

    def _append_point(self, point: EvalPoint) -> None:
        with open(self.out_dir / RUNS_FILE, 'a', encoding='utf-8', newline='\n') as f:
            f.write(json.dumps(dict(asdict(point), config_digest=self.digest, size=self.config.model.size),
                               sort_keys=True) + '\n')

    def train(self, resume: bool = False, stop_after: Optional[int] = None) -> RunRecord:
        """
        Run (or continue) training to the planned step count.

        Args:
            resume (bool=False):
                Continue from ``checkpoint.pt`` in the output directory.
            stop_after (int=None):
                Stop after this many steps and checkpoint, as if interrupted.

        Returns:
            RunRecord; also written to ``run_record.json``.
        """
        plan = self.plan()
        train = self.config.train
        self.out_dir.mkdir(parents=True, exist_ok=True)
        self.vocabulary.save(self.out_dir / VOCABULARY_FILE)
        with open(self.out_dir / CONFIG_FILE, 'w', encoding='utf-8', newline='\n') as f:
            f.write(dumps_config(self.config))

        torch.manual_seed(self.config.seed)
        if train.deterministic:
            torch.use_deterministic_algorithms(True, warn_only=True)
        model = SymbolicTransformer(self.model_config)
        optimizer = DecoupledAdam.for_model(model, train, decay_parameter_names(model))
        stream = BatchStream(len(self.train_items), train.batch_size, self.config.seed)
        pad_id = self.vocabulary.pad_id
        cells_per_step = train.batch_size * self.config.data.n_points * (self.model_config.n_vars + 1)

        step, tokens_in, tokens_out = 0, 0, 0
        loss_sum, loss_count = 0.0, 0
        points: List[EvalPoint] = []
        checkpoint_path = self.out_dir / CHECKPOINT_FILE
        if resume and checkpoint_path.is_file():
            checkpoint = load_checkpoint(checkpoint_path, self.vocabulary)
            extra = checkpoint.extra
            if extra['config_digest'] != self.digest:
                message = f'checkpoint in {self.out_dir} belongs to another config'
                if not self.force:
                    raise ArtifactHashError(message)
                LOGGER.warning(message + ' (continuing because of --force)')
            model.load_state_dict(checkpoint.state_dict)
            optimizer.load_state_dict(checkpoint.optimizer)
            stream.load_state_dict(extra['stream'])
            torch.set_rng_state(checkpoint.rng_state)
            step = checkpoint.step
            tokens_in, tokens_out = extra['tokens_in'], extra['tokens_out']
            loss_sum, loss_count = extra['loss_sum'], extra['loss_count']
            points = [EvalPoint(**point) for point in extra['points']]
            LOGGER.info(f'resuming at step {step} of {plan.total_steps}')
        self._write_points(points)

        def checkpoint_now() -> None:
            save_checkpoint(checkpoint_path, Checkpoint(
                model_config=self.model_config,
                vocabulary=self.vocabulary,
                state_dict=model.state_dict(),
                step=step,
                optimizer=optimizer.state_dict(),
                rng_state=torch.get_rng_state(),
                extra={
                    'config_digest': self.digest,
                    'stream': stream.state_dict(),
                    'tokens_in': tokens_in,
                    'tokens_out': tokens_out,
                    'loss_sum': loss_sum,
                    'loss_count': loss_count,
                    'points': [asdict(point) for point in points],
                },
            ))

        eval_at = set(plan.eval_steps)
        model.train()
        bar = tqdm(total=plan.total_steps, initial=step, desc='train', disable=not self.progress)
        while step < plan.total_steps:
            batch = collate([self.train_items[i] for i in stream.next_indices()], pad_id)
            logits = model(batch.mantissas, batch.exponents, batch.decoder_inputs)
            loss = sequence_loss(logits, batch.labels, pad_id)
            optimizer.zero_grad()
            loss.backward()
            lr = lr_schedule(step + 1, plan.total_steps, train.learning_rate,
                             train.warmup_fraction, train.decay_floor)
            outcome = optimizer.step(lr)
            step += 1
            bar.update(1)
            tokens_in += cells_per_step
            tokens_out += batch.n_output_tokens
            loss_value = float(loss)
            if not outcome.skipped and math.isfinite(loss_value):
                loss_sum += loss_value
                loss_count += 1
            if step in eval_at:
                point = EvalPoint(
                    step=step,
                    tokens_in=tokens_in,
                    tokens_out=tokens_out,
                    flops=training_flops(plan.n_enc, plan.n_dec, tokens_in, tokens_out),
                    train_loss=loss_sum / loss_count if loss_count else float('nan'),
                    validation_loss=validation_loss(model, self.validation_items, pad_id, train.eval_batch_size),
                    learning_rate=lr,
                )
                points.append(point)
                self._append_point(point)
                loss_sum, loss_count = 0.0, 0
                LOGGER.info(f'step {step}/{plan.total_steps}: train loss {point.train_loss:.4f}, '
                            f'validation loss {point.validation_loss:.4f}, FLOPs {point.flops:.3e}')
                checkpoint_now()
            if stop_after is not None and step >= stop_after and step < plan.total_steps:
                checkpoint_now()
                LOGGER.info(f'stopping at step {step} as requested')
                break
        bar.close()

        record = self._record(points)
        if points:
            record.final_metrics['validation_loss'] = points[-1].validation_loss
        record.system = system_snapshot()
        record.save(self.out_dir / RUN_RECORD_FILE)
        return record


def load_trained_model(run_dir: Union[Path, str]) -> SymbolicTransformer:
    checkpoint = load_checkpoint(Path(run_dir) / CHECKPOINT_FILE)
    model = checkpoint.build_model()
    model.eval()
    return model
