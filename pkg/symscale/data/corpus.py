"""Corpus building and loading.

Training pairs: for every base expression, ``pairs_per_expression`` draws, each
with its own seed derived from (global seed, split, expression id, pair index).
Validation and test: a seeded choice of base expressions, each given fresh
constants and a fresh dataset, trying up to ``SPLIT_ATTEMPTS`` pair indices
until one succeeds. Split tags keep the seed spaces of the three splits
apart, and every pair depends only on its own seed, so results do not depend
on how the work is scheduled.

``corpus.json`` records the config digest, per-split counts, rejection
statistics and the sha256 of every shard.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple, Union

# third-party imports
import numpy as np
from tqdm import tqdm

# symscale
from symscale.config.pipeline import DataConfig, PipelineConfig, stage_digest
from symscale.data.pairs import SPLIT_TAGS, ExprDatasetPair, Rejection, pair_seed, sample_pair
from symscale.data.shards import iter_shard, write_jsonl, write_shard
from symscale.exceptions import ArtifactHashError, DataError
from symscale.expressions.canonical import CanonicalForm
from symscale.expressions.generator import ExpressionSet
from symscale.tokens.vocabulary import build_vocabulary
from symscale.utils.checksums import sha256_file, verify_sha256
from symscale.utils.parallel import parallel_chunks


logging.basicConfig(
    format='[symscale][%(asctime)s][%(levelname)s]: %(message)s',
    level=logging.INFO
)
LOGGER: logging.Logger = logging.getLogger(__name__)

MANIFEST_FILE: str = 'corpus.json'
SHARD_SUFFIX: str = '.syms'
JSONL_SUFFIX: str = '.jsonl'
SPLIT_ATTEMPTS: int = 10
FORMATS = ('binary', 'jsonl', 'both')


@dataclass
class SplitSummary:
    split: str
    n_pairs: int = 0
    attempts: int = 0
    rejections: Dict[str, int] = field(default_factory=dict)
    shards: List[Dict] = field(default_factory=list)
    dropped: int = 0

    @property
    def rejection_rate(self) -> float:
        return sum(self.rejections.values()) / self.attempts if self.attempts else 0.0

    def to_dict(self) -> Dict:
        return {
            'n_pairs': self.n_pairs,
            'attempts': self.attempts,
            'dropped': self.dropped,
            'rejections': dict(sorted(self.rejections.items())),
            'rejection_rate': self.rejection_rate,
            'shards': self.shards,
        }


class ShardWriter:
    """
    Accumulates pairs and writes a shard every ``shard_size`` pairs.
    """

    def __init__(self, directory: Path, split: str, summary: SplitSummary,
                 shard_size: int, n_points: int, n_vars: int, fmt: str = 'binary') -> None:
        self.directory = directory
        self.split = split
        self.summary = summary
        self.shard_size = shard_size
        self.n_points = n_points
        self.n_vars = n_vars
        self.fmt = fmt
        self.buffer: List[ExprDatasetPair] = []

    def add(self, pair: ExprDatasetPair) -> None:
        self.buffer.append(pair)
        self.summary.n_pairs += 1
        if len(self.buffer) >= self.shard_size:
            self.flush()

    def flush(self) -> None:
        if not self.buffer and self.summary.shards:
            return
        stem = f'{self.split}-{len(self.summary.shards):05d}'
        record = {'n_pairs': len(self.buffer)}
        if self.fmt in ('binary', 'both'):
            shard_path = self.directory / (stem + SHARD_SUFFIX)
            write_shard(shard_path, self.buffer, self.n_points, self.n_vars)
            record.update(file=shard_path.name, sha256=sha256_file(shard_path))
        if self.fmt in ('jsonl', 'both'):
            mirror_path = self.directory / (stem + JSONL_SUFFIX)
            write_jsonl(mirror_path, self.buffer)
            record.update(jsonl=mirror_path.name)
        self.summary.shards.append(record)
        self.buffer = []


def _sample_training_chunk(
    chunk: List[Tuple[int, CanonicalForm]],
    config: DataConfig,
    seed: int,
) -> List[Union[ExprDatasetPair, Rejection]]:
    vocabulary = build_vocabulary(config.n_vars)
    results = []
    for expression_id, form in chunk:
        for pair_index in range(config.pairs_per_expression):
            pair_rng_seed = pair_seed(seed, 'train', expression_id, pair_index)
            results.append(sample_pair(form.expression, config, np.random.default_rng(pair_rng_seed),
                                       pair_rng_seed, expression_id, vocabulary))
    return results


def _sample_split_chunk(
    chunk: List[Tuple[int, int, CanonicalForm]],
    config: DataConfig,
    seed: int,
    split: str,
) -> List[Tuple[Union[ExprDatasetPair, Rejection], int]]:
    vocabulary = build_vocabulary(config.n_vars)
    results = []
    for expression_id, occurrence, form in chunk:
        outcome: Union[ExprDatasetPair, Rejection] = Rejection('targets')
        attempts = 0
        for attempt in range(SPLIT_ATTEMPTS):
            attempts += 1
            pair_index = occurrence * SPLIT_ATTEMPTS + attempt
            pair_rng_seed = pair_seed(seed, split, expression_id, pair_index)
            outcome = sample_pair(form.expression, config, np.random.default_rng(pair_rng_seed),
                                  pair_rng_seed, expression_id, vocabulary)
            if isinstance(outcome, ExprDatasetPair):
                break
        results.append((outcome, attempts))
    return results


def choose_split_expressions(n_expressions: int, count: int, seed: int, split: str) -> List[Tuple[int, int]]:
    """
    Seeded choice of ``count`` base expression ids for a held-out split, as
    sorted (expression id, occurrence) tuples. Ids repeat only when ``count``
    exceeds the number of base expressions.
    """
    rng = np.random.default_rng(np.random.SeedSequence((seed, SPLIT_TAGS[split])))
    replace = count > n_expressions
    chosen = np.sort(rng.choice(n_expressions, size=count, replace=replace))
    occurrences: Counter = Counter()
    result = []
    for expression_id in chosen.tolist():
        result.append((expression_id, occurrences[expression_id]))
        occurrences[expression_id] += 1
    return result


def _log_summary(summary: SplitSummary) -> None:
    LOGGER.info(
        f'{summary.split}: {summary.n_pairs} pairs from {summary.attempts} draws, '
        f'rejection rate {summary.rejection_rate:.3f} {dict(sorted(summary.rejections.items()))}'
    )
    if summary.rejection_rate >= 0.5:
        LOGGER.warning(f'{summary.split}: rejection rate {summary.rejection_rate:.3f} is at least 50%')


def build_corpus(
    expression_set: ExpressionSet,
    config: PipelineConfig,
    out_dir: Union[Path, str],
    n_jobs: int = 1,
    fmt: str = 'binary',
    progress: bool = False,
) -> Dict:
    """
    Sample the training, validation and test splits and write them as shards.

    Args:
        expression_set (ExpressionSet):
            The base expressions E, non-empty.
        config (PipelineConfig):
            Uses the global seed and the data section.
        out_dir (Union[Path, str]):
        n_jobs (int=1):
            joblib workers.
        fmt (str='binary'):
            'binary', 'jsonl' or 'both'.
        progress (bool=False):

    Returns:
        The manifest written to ``corpus.json``.
    """
    if fmt not in FORMATS:
        raise ValueError(f'format must be one of {FORMATS}, got {fmt!r}')
    forms = expression_set.all()
    if not forms:
        raise DataError('cannot build a corpus from an empty expression set')
    data = config.data
    directory = Path(out_dir)
    directory.mkdir(parents=True, exist_ok=True)

    summaries: Dict[str, SplitSummary] = {}

    summary = summaries.setdefault('train', SplitSummary('train'))
    writer = ShardWriter(directory, 'train', summary, data.shard_size, data.n_points, data.n_vars, fmt)
    items = list(enumerate(forms))
    chunks = parallel_chunks(partial(_sample_training_chunk, config=data, seed=config.seed), items, n_jobs)
    for results in tqdm(chunks, desc='train pairs', disable=not progress):
        for outcome in results:
            summary.attempts += 1
            if isinstance(outcome, Rejection):
                summary.rejections[outcome.reason] = summary.rejections.get(outcome.reason, 0) + 1
            else:
                writer.add(outcome)
    writer.flush()
    _log_summary(summary)

    for split, count in (('validation', data.validation_expressions), ('test', data.test_expressions)):
        summary = summaries.setdefault(split, SplitSummary(split))
        writer = ShardWriter(directory, split, summary, data.shard_size, data.n_points, data.n_vars, fmt)
        chosen = [(expression_id, occurrence, forms[expression_id])
                  for expression_id, occurrence in choose_split_expressions(len(forms), count, config.seed, split)]
        chunks = parallel_chunks(partial(_sample_split_chunk, config=data, seed=config.seed, split=split),
                                 chosen, n_jobs)
        for results in tqdm(chunks, desc=f'{split} pairs', disable=not progress):
            for outcome, attempts in results:
                summary.attempts += attempts
                failed = attempts if isinstance(outcome, Rejection) else attempts - 1
                if failed:
                    summary.rejections['draw'] = summary.rejections.get('draw', 0) + failed
                if isinstance(outcome, Rejection):
                    summary.dropped += 1
                else:
                    writer.add(outcome)
        writer.flush()
        _log_summary(summary)

    manifest = {
        'config_digest': stage_digest(config, 'corpus'),
        'format': fmt,
        'n_points': data.n_points,
        'n_vars': data.n_vars,
        'seed': config.seed,
        'splits': {name: summaries[name].to_dict() for name in ('train', 'validation', 'test')},
    }
    with open(directory / MANIFEST_FILE, 'w', encoding='utf-8', newline='\n') as f:
        f.write(json.dumps(manifest, indent=2, sort_keys=True) + '\n')
    return manifest


class Corpus:
    """
    Read access to a corpus directory written by ``build_corpus``.
    """

    def __init__(self, directory: Union[Path, str], manifest: Dict) -> None:
        self.directory = Path(directory)
        self.manifest = manifest

    @classmethod
    def open(
        cls,
        directory: Union[Path, str],
        expected_digest: Optional[str] = None,
        force: bool = False,
        verify: bool = True,
    ) -> 'Corpus':
        """
        Raises:
            ArtifactHashError:
                Raised if the corpus was built from another config, unless
                ``force`` is set.
            ChecksumError:
                Raised if a shard does not match its recorded sha256.
        """
        directory = Path(directory)
        manifest_path = directory / MANIFEST_FILE
        if not manifest_path.is_file():
            raise DataError(f'no corpus manifest at {manifest_path}')
        with open(manifest_path, 'r', encoding='utf-8') as f:
            manifest = json.load(f)
        if expected_digest is not None and manifest['config_digest'] != expected_digest:
            message = (f'corpus at {directory} was built with config {manifest["config_digest"][:12]}, '
                       f'expected {expected_digest[:12]}')
            if not force:
                raise ArtifactHashError(message)
            LOGGER.warning(message + ' (continuing because of --force)')
        if manifest['format'] == 'jsonl':
            raise DataError(f'corpus at {directory} has no binary shards')
        corpus = cls(directory, manifest)
        if verify:
            for split in manifest['splits'].values():
                for shard in split['shards']:
                    verify_sha256(directory / shard['file'], shard['sha256'])
        return corpus

    @property
    def n_vars(self) -> int:
        return self.manifest['n_vars']

    @property
    def n_points(self) -> int:
        return self.manifest['n_points']

    def split_size(self, split: str) -> int:
        return self.manifest['splits'][split]['n_pairs']

    def iter_pairs(self, split: str) -> Iterator[ExprDatasetPair]:
        for shard in self.manifest['splits'][split]['shards']:
            yield from iter_shard(self.directory / shard['file'])

    def pairs(self, split: str) -> List[ExprDatasetPair]:
        return list(self.iter_pairs(split))


def open_corpus(directory: Union[Path, str], config: Optional[PipelineConfig] = None, force: bool = False) -> Corpus:
    expected = stage_digest(config, 'corpus') if config is not None else None
    return Corpus.open(directory, expected, force)
