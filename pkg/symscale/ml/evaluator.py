"""Best-of-n sampling evaluation.

For every test pair the model draws ``n_candidates`` sequences; each parsed
candidate is scored by R² on the pair's own points and the best one is kept.
Acc_solved counts pairs whose best candidate is symbolically identical to the
ground truth, Acc_{R²>0.99} counts pairs whose best R² exceeds 0.99. Both are
reported per seed and as the mean over seeds, together with the test-split
cross-entropy of the ground-truth sequences.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import json
import logging
from dataclasses import asdict, dataclass, field
from itertools import chain
from pathlib import Path
from typing import Dict, List, Optional, Sequence, Union

# third-party imports
import numpy as np
import pandas as pd
from sklearn.metrics import r2_score
from tqdm import tqdm

# symscale
from symscale.data.pairs import ExprDatasetPair
from symscale.exceptions import DataError, ExpressionParseError
from symscale.expressions.canonical import symbolic_equal
from symscale.expressions.printing import format_expression
from symscale.expressions.tree import evaluate_batch
from symscale.ml.batching import CellGrid, encode_pairs
from symscale.ml.model import SymbolicTransformer
from symscale.ml.sampling import candidate_rngs, sample_candidates
from symscale.ml.trainer import RUN_RECORD_FILE, RunRecord, validation_loss
from symscale.tokens.latex_tokens import decode_expression
from symscale.tokens.vocabulary import Vocabulary
from symscale.utils.parallel import parallel_chunks


logging.basicConfig(
    format='[symscale][%(asctime)s][%(levelname)s]: %(message)s',
    level=logging.INFO
)
LOGGER: logging.Logger = logging.getLogger(__name__)

R2_THRESHOLD: float = 0.99
REPORT_FILE: str = 'eval_report.json'
SUMMARY_FILE: str = 'eval_summary.csv'


def r_squared(y_true, y_pred) -> float:
    """
    Coefficient of determination ``1 - SS_res / SS_tot``.

    Constant targets give 1 for an exact fit and -inf otherwise; any
    non-finite prediction gives -inf.

    Raises:
        ValueError:
            Raised on a length mismatch or fewer than two points.
    """
    y_true = np.asarray(y_true, dtype=np.float64).ravel()
    y_pred = np.asarray(y_pred, dtype=np.float64).ravel()
    if y_true.shape != y_pred.shape:
        raise ValueError(f'length mismatch: {len(y_true)} targets, {len(y_pred)} predictions')
    if len(y_true) < 2:
        raise ValueError('R² needs at least two points')
    if not np.all(np.isfinite(y_pred)):
        return float('-inf')
    if np.all(y_true == y_true[0]):
        return 1.0 if np.array_equal(y_true, y_pred) else float('-inf')
    with np.errstate(over='ignore', invalid='ignore'):
        score = float(r2_score(y_true, y_pred))
    return score if np.isfinite(score) else float('-inf')


@dataclass
class ExpressionDetail:
    index: int
    ground_truth: str
    best_candidate: Optional[str]
    best_r2: float
    solved: bool
    n_parsed: int

    @property
    def r2_solved(self) -> bool:
        return self.best_r2 > R2_THRESHOLD


@dataclass
class SeedMetrics:
    seed: int
    acc_solved: float
    acc_r2: float
    n_expressions: int


@dataclass
class EvalReport:
    seeds: List[int]
    per_seed: List[SeedMetrics]
    details: Dict[int, List[ExpressionDetail]]
    test_loss: float
    n_candidates: int
    config_digest: str = ''
    extra: Dict = field(default_factory=dict)

    def __post_init__(self):
        for metrics in self.per_seed:
            if not 0.0 <= metrics.acc_solved <= metrics.acc_r2 <= 1.0:
                raise ValueError(f'inconsistent accuracies for seed {metrics.seed}: '
                                 f'solved {metrics.acc_solved}, R² {metrics.acc_r2}')

    @property
    def acc_solved(self) -> float:
        return float(np.mean([m.acc_solved for m in self.per_seed]))

    @property
    def acc_r2(self) -> float:
        return float(np.mean([m.acc_r2 for m in self.per_seed]))

    def summary_frame(self) -> pd.DataFrame:
        rows = [dict(seed=str(m.seed), acc_solved=m.acc_solved, acc_r2=m.acc_r2, test_loss=self.test_loss,
                     n_expressions=m.n_expressions) for m in self.per_seed]
        rows.append(dict(seed='mean', acc_solved=self.acc_solved, acc_r2=self.acc_r2, test_loss=self.test_loss,
                         n_expressions=self.per_seed[0].n_expressions if self.per_seed else 0))
        return pd.DataFrame(rows, columns=['seed', 'acc_solved', 'acc_r2', 'test_loss', 'n_expressions'])

    def to_dict(self) -> Dict:
        def finite_or_none(value: float) -> Optional[float]:
            return value if np.isfinite(value) else None

        return {
            'config_digest': self.config_digest,
            'n_candidates': self.n_candidates,
            'seeds': self.seeds,
            'acc_solved': self.acc_solved,
            'acc_r2': self.acc_r2,
            'test_loss': self.test_loss,
            'per_seed': [asdict(m) for m in self.per_seed],
            'details': {str(seed): [dict(asdict(d), best_r2=finite_or_none(d.best_r2)) for d in details]
                        for seed, details in self.details.items()},
            'extra': self.extra,
        }

    def save(self, out_dir: Union[Path, str]) -> None:
        out_dir = Path(out_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        with open(out_dir / REPORT_FILE, 'w', encoding='utf-8', newline='\n') as f:
            f.write(json.dumps(self.to_dict(), indent=2, sort_keys=True) + '\n')
        self.summary_frame().to_csv(out_dir / SUMMARY_FILE, index=False, float_format='%.6f',
                                    lineterminator='\n')


def score_candidate(candidate, pair: ExprDatasetPair) -> float:
    try:
        predictions = evaluate_batch(candidate, pair.inputs)
    except ValueError:
        return float('-inf')
    return r_squared(pair.targets, predictions)


def evaluate_expression(
    model: SymbolicTransformer,
    pair: ExprDatasetPair,
    vocabulary: Vocabulary,
    n_candidates: int = 128,
    seed: int = 0,
    index: int = 0,
    temperature: float = 1.0,
    candidates: Optional[Sequence[Sequence[int]]] = None,
) -> ExpressionDetail:
    """
    Sample, score and pick the best candidate for one pair.

    Args:
        model (SymbolicTransformer):
        pair (ExprDatasetPair):
        vocabulary (Vocabulary):
        n_candidates (int=128):
        seed (int=0):
            Evaluation seed; candidate j of expression ``index`` uses the
            generator seeded by (seed, index, j).
        index (int=0):
            Position of the pair in the evaluated split.
        temperature (float=1.0):
        candidates (Sequence[Sequence[int]]=None):
            Token sequences to score instead of sampling.

    Returns:
        ExpressionDetail. Ties on R² keep the earliest candidate; unparsable
        candidates score -inf.
    """
    if candidates is None:
        mantissas, exponents = CellGrid.from_pair(pair).tensors()
        candidates = sample_candidates(model, mantissas, exponents, candidate_rngs(seed, index, n_candidates),
                                       vocabulary.bos_id, vocabulary.eos_id, temperature)
    best, best_r2, n_parsed = None, float('-inf'), 0
    for token_ids in candidates:
        try:
            candidate = decode_expression(token_ids, vocabulary)
        except ExpressionParseError:
            continue
        n_parsed += 1
        score = score_candidate(candidate, pair)
        if best is None or score > best_r2:
            best, best_r2 = candidate, score
    truth = pair.expression
    solved = (best is not None and best_r2 > R2_THRESHOLD
              and symbolic_equal(best, truth.expression, strip=False))
    return ExpressionDetail(
        index=index,
        ground_truth=truth.string,
        best_candidate=format_expression(best) if best is not None else None,
        best_r2=best_r2,
        solved=solved,
        n_parsed=n_parsed,
    )


def evaluate_model(
    model: SymbolicTransformer,
    pairs: Sequence[ExprDatasetPair],
    vocabulary: Vocabulary,
    seeds: Sequence[int] = (0, 1, 2),
    n_candidates: int = 128,
    temperature: float = 1.0,
    batch_size: int = 64,
    n_jobs: int = 1,
    progress: bool = False,
    config_digest: str = '',
) -> EvalReport:
    """
    Evaluate a model on a split with one best-of-n pass per seed.

    Raises:
        ValueError:
            Raised for an empty split or an empty seed list.
    """
    if not pairs:
        raise ValueError('cannot evaluate on an empty split')
    if not seeds:
        raise ValueError('at least one evaluation seed is required')
    model.eval()
    test_loss = validation_loss(model, encode_pairs(pairs, vocabulary, model.config.max_output_length),
                                vocabulary.pad_id, batch_size)
    indices = list(range(len(pairs)))
    per_seed, details = [], {}
    for seed in seeds:
        def evaluate_chunk(chunk: List[int]) -> List[ExpressionDetail]:
            return [evaluate_expression(model, pairs[i], vocabulary, n_candidates, seed, i, temperature)
                    for i in chunk]

        chunks = parallel_chunks(evaluate_chunk, indices, n_jobs=n_jobs, prefer='threads')
        seed_details = list(tqdm(chain.from_iterable(chunks), total=len(pairs),
                                 desc=f'evaluate seed {seed}', disable=not progress))
        metrics = SeedMetrics(
            seed=int(seed),
            acc_solved=sum(d.solved for d in seed_details) / len(seed_details),
            acc_r2=sum(d.r2_solved for d in seed_details) / len(seed_details),
            n_expressions=len(seed_details),
        )
        LOGGER.info(f'seed {seed}: Acc_solved {metrics.acc_solved:.4f}, Acc_R2 {metrics.acc_r2:.4f}')
        per_seed.append(metrics)
        details[int(seed)] = seed_details
    return EvalReport(
        seeds=[int(seed) for seed in seeds],
        per_seed=per_seed,
        details=details,
        test_loss=test_loss,
        n_candidates=n_candidates,
        config_digest=config_digest,
    )


def attach_to_run_record(run_dir: Union[Path, str], report: EvalReport) -> Optional[RunRecord]:
    """
    Copy the report's mean metrics into ``run_record.json`` when the run
    directory has one.
    """
    path = Path(run_dir) / RUN_RECORD_FILE
    if not path.is_file():
        LOGGER.warning(f'no run record in {run_dir}; final metrics not attached')
        return None
    record = RunRecord.load(path)
    record.final_metrics.update(acc_solved=report.acc_solved, acc_r2=report.acc_r2, test_loss=report.test_loss)
    record.save(path)
    return record


def require_split(pairs: Sequence[ExprDatasetPair], split: str) -> Sequence[ExprDatasetPair]:
    if not pairs:
        raise DataError(f'the {split} split is empty')
    return pairs
