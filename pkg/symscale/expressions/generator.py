"""Recursive generation of the base expression set.

Level 0 holds the variables. Level i applies every unary operator to every
member of level i-1 and every binary operator to every pair drawn from level
i-1 and levels 0..i-1, in both argument orders. Candidates are canonicalized
(with stripping) in parallel chunks; deduplication against a global index of
canonical strings is the single serial step. Levels are added whole while they
fit under the threshold; the first level that does not fit is sampled without
replacement by reservoir sampling over its deterministic stream of new forms,
and generation stops there.
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
from functools import partial
from itertools import islice
from pathlib import Path
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Set, Tuple, Union

# third-party imports
import numpy as np
from tqdm import tqdm

# symscale
from symscale.exceptions import CanonicalizationError, CapExceededError, ConfigError
from symscale.expressions.canonical import CanonicalForm, canonicalize
from symscale.expressions.normal_form import DEFAULT_NODE_CAP
from symscale.expressions.tree import (
    BINARY_OPS, UNARY_OPS, Binary, BinaryOp, Expression, Unary, UnaryOp, Variable,
)
from symscale.utils.parallel import parallel_chunks


logging.basicConfig(
    format='[symscale][%(asctime)s][%(levelname)s]: %(message)s',
    level=logging.INFO
)
LOGGER: logging.Logger = logging.getLogger(__name__)

EXPRESSIONS_FILE: str = 'expressions.jsonl'
STATS_FILE: str = 'stats.json'

_OK, _DUPLICATE, _CONSTANT, _CAP, _ERROR = 'ok', 'duplicate', 'constant', 'cap', 'error'


@dataclass
class LevelStats:
    level: int
    candidates: int = 0
    duplicates: int = 0
    constants_dropped: int = 0
    cap_dropped: int = 0
    errors_dropped: int = 0
    unique: int = 0
    kept: int = 0
    sampled: bool = False


@dataclass
class GenerationStats:
    levels: List[LevelStats] = field(default_factory=list)

    @property
    def candidates(self) -> int:
        return sum(level.candidates for level in self.levels)

    @property
    def duplicates(self) -> int:
        return sum(level.duplicates for level in self.levels)

    @property
    def constants_dropped(self) -> int:
        return sum(level.constants_dropped for level in self.levels)

    @property
    def cap_dropped(self) -> int:
        return sum(level.cap_dropped for level in self.levels)

    def to_dict(self) -> Dict:
        return {
            'candidates': self.candidates,
            'duplicates': self.duplicates,
            'constants_dropped': self.constants_dropped,
            'cap_dropped': self.cap_dropped,
            'levels': [asdict(level) for level in self.levels],
        }


def base_level(n_vars: int) -> List[CanonicalForm]:
    return [canonicalize(Variable(index)) for index in range(1, n_vars + 1)]


class ExpressionSet:
    """
    Levels E_0..E_d of canonical base expressions plus the global dedup index.
    """

    def __init__(self, n_vars: int, threshold: int, seed: int = 0) -> None:
        if n_vars < 1:
            raise ConfigError(f'n_vars must be >= 1, got {n_vars}')
        self.n_vars: int = n_vars
        self.threshold: int = threshold
        self.seed: int = seed
        self.levels: List[List[CanonicalForm]] = [base_level(n_vars)]
        self.index: Set[str] = {form.string for form in self.levels[0]}
        self.stats: GenerationStats = GenerationStats()

    def __len__(self) -> int:
        return sum(len(level) for level in self.levels)

    def __iter__(self) -> Iterator[CanonicalForm]:
        for level in self.levels:
            yield from level

    def __contains__(self, form: CanonicalForm) -> bool:
        return form.string in self.index

    @property
    def max_depth(self) -> int:
        return len(self.levels) - 1

    def all(self) -> List[CanonicalForm]:
        return list(self)

    def add_level(self, forms: Sequence[CanonicalForm]) -> None:
        self.levels.append(sorted(forms, key=lambda form: form.string))
        self.index.update(form.string for form in forms)

    def save(self, directory: Union[Path, str], config_digest: str = '') -> None:
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        with open(directory / EXPRESSIONS_FILE, 'w', encoding='utf-8', newline='\n') as f:
            for level_index, level in enumerate(self.levels):
                for form in level:
                    record = {'canonical_string': form.string, 'depth': form.depth, 'level_index': level_index}
                    f.write(json.dumps(record, sort_keys=True) + '\n')
        stats = {
            'config_digest': config_digest,
            'n_vars': self.n_vars,
            'threshold': self.threshold,
            'seed': self.seed,
            'size': len(self),
            'level_sizes': [len(level) for level in self.levels],
            'generation': self.stats.to_dict(),
        }
        with open(directory / STATS_FILE, 'w', encoding='utf-8', newline='\n') as f:
            f.write(json.dumps(stats, indent=2, sort_keys=True) + '\n')

    @classmethod
    def load(cls, directory: Union[Path, str]) -> 'ExpressionSet':
        directory = Path(directory)
        with open(directory / STATS_FILE, 'r', encoding='utf-8') as f:
            stats = json.load(f)
        expression_set = cls(stats['n_vars'], stats['threshold'], stats['seed'])
        levels: Dict[int, List[CanonicalForm]] = {}
        with open(directory / EXPRESSIONS_FILE, 'r', encoding='utf-8') as f:
            for line in f:
                if not line.strip():
                    continue
                record = json.loads(line)
                form = CanonicalForm.from_string(record['canonical_string'])
                levels.setdefault(record['level_index'], []).append(form)
        expression_set.levels = [levels.get(i, []) for i in range(max(levels) + 1)] if levels else []
        expression_set.index = {form.string for form in expression_set}
        expression_set.stats.levels = [LevelStats(**level) for level in stats['generation']['levels']]
        return expression_set


def read_config_digest(directory: Union[Path, str]) -> str:
    with open(Path(directory) / STATS_FILE, 'r', encoding='utf-8') as f:
        return json.load(f).get('config_digest', '')


# -----------------------------------------------------------------------------
# Candidate streams
# -----------------------------------------------------------------------------


def count_candidates(
    levels: Sequence[Sequence[CanonicalForm]],
    i: int,
    unary_ops: Sequence[UnaryOp] = UNARY_OPS,
    binary_ops: Sequence[BinaryOp] = BINARY_OPS,
) -> int:
    previous = len(levels[i - 1])
    lower = sum(len(level) for level in levels[:i])
    return len(unary_ops) * previous + 2 * len(binary_ops) * previous * lower


def iter_candidates(
    levels: Sequence[Sequence[CanonicalForm]],
    i: int,
    unary_ops: Sequence[UnaryOp] = UNARY_OPS,
    binary_ops: Sequence[BinaryOp] = BINARY_OPS,
) -> Iterator[Expression]:
    """
    Deterministic stream of construction trees for level ``i``.
    """
    previous = [form.expression for form in levels[i - 1]]
    lower = [form.expression for level in levels[:i] for form in level]
    for op in unary_ops:
        for child in previous:
            yield Unary(op, child)
    for op in binary_ops:
        for left in previous:
            for right in lower:
                yield Binary(op, left, right)
                yield Binary(op, right, left)


def _canonicalize_chunk(chunk: List[Expression], node_cap: int) -> List[Tuple[str, Optional[CanonicalForm]]]:
    results: List[Tuple[str, Optional[CanonicalForm]]] = []
    for candidate in chunk:
        try:
            form = canonicalize(candidate, strip=True, node_cap=node_cap)
        except CapExceededError:
            results.append((_CAP, None))
            continue
        except CanonicalizationError:
            results.append((_ERROR, None))
            continue
        results.append((_CONSTANT, None) if form.is_constant else (_OK, form))
    return results


def _blocks(stream: Iterable[Expression], size: int) -> Iterator[List[Expression]]:
    iterator = iter(stream)
    while True:
        block = list(islice(iterator, size))
        if not block:
            return
        yield block


def _stream_level(
    levels: Sequence[Sequence[CanonicalForm]],
    i: int,
    index: Set[str],
    capacity: Optional[int],
    rng: Optional[np.random.Generator],
    unary_ops: Sequence[UnaryOp],
    binary_ops: Sequence[BinaryOp],
    n_jobs: int,
    node_cap: int,
    block_size: int,
    progress: bool,
) -> Tuple[List[CanonicalForm], LevelStats]:
    """
    Canonicalize and deduplicate the candidate stream of level ``i``.
    With a capacity, keeps a uniform reservoir of that many new forms
    (Algorithm R); ``index`` receives every new string seen.
    """
    stats = LevelStats(level=i)
    reservoir: List[CanonicalForm] = []
    total = count_candidates(levels, i, unary_ops, binary_ops)
    worker = partial(_canonicalize_chunk, node_cap=node_cap)
    candidates = iter_candidates(levels, i, unary_ops, binary_ops)
    with tqdm(total=total, disable=not progress, desc=f'level {i}', unit='expr') as progress_bar:
        for block in _blocks(candidates, block_size):
            for results in parallel_chunks(worker, block, n_jobs=n_jobs):
                for status, form in results:
                    stats.candidates += 1
                    if status == _CAP:
                        stats.cap_dropped += 1
                    elif status == _ERROR:
                        stats.errors_dropped += 1
                    elif status == _CONSTANT:
                        stats.constants_dropped += 1
                    elif form.string in index:
                        stats.duplicates += 1
                    else:
                        index.add(form.string)
                        stats.unique += 1
                        if capacity is None or len(reservoir) < capacity:
                            reservoir.append(form)
                        else:
                            slot = int(rng.integers(0, stats.unique))
                            if slot < capacity:
                                reservoir[slot] = form
            progress_bar.update(len(block))
    stats.kept = len(reservoir)
    stats.sampled = capacity is not None and stats.unique > capacity
    return sorted(reservoir, key=lambda item: item.string), stats


def generate_level(
    prior: ExpressionSet,
    i: int,
    unary_ops: Sequence[UnaryOp] = UNARY_OPS,
    binary_ops: Sequence[BinaryOp] = BINARY_OPS,
    n_jobs: int = 1,
    node_cap: int = DEFAULT_NODE_CAP,
    block_size: int = 20000,
    progress: bool = False,
) -> List[CanonicalForm]:
    """
    Return every new canonical, variable-containing expression of level ``i``
    in canonical-string order. ``prior`` is not modified.

    Raises:
        ValueError:
            Raised if ``i < 1`` (level 0 is fixed) or level ``i - 1`` is missing.
    """
    if i < 1:
        raise ValueError('level 0 is fixed to the variables; generate levels i >= 1')
    if i > len(prior.levels):
        raise ValueError(f'level {i - 1} has not been generated yet')
    forms, _ = _stream_level(
        prior.levels[:i], i, set(prior.index), None, None,
        unary_ops, binary_ops, n_jobs, node_cap, block_size, progress,
    )
    return forms


def build_expression_set(
    n_vars: int,
    max_depth: int,
    threshold: int,
    seed: int = 0,
    unary_ops: Sequence[UnaryOp] = UNARY_OPS,
    binary_ops: Sequence[BinaryOp] = BINARY_OPS,
    n_jobs: int = 1,
    node_cap: int = DEFAULT_NODE_CAP,
    block_size: int = 20000,
    progress: bool = False,
) -> ExpressionSet:
    """
    Build E: complete levels while they fit under ``threshold``, then a
    seeded uniform sample of the first level that does not fit.

    Args:
        n_vars (int):
        max_depth (int):
            Deepest construction level, >= 1.
        threshold (int):
            Target size |E|, at least ``n_vars``.
        seed (int=0):
            Seed of the final-level reservoir sample.

    Returns:
        ExpressionSet of size min(threshold, total available).
    """
    if max_depth < 1:
        raise ConfigError(f'max_depth must be >= 1, got {max_depth}')
    if threshold < n_vars:
        raise ConfigError(f'threshold {threshold} is smaller than |E_0| = {n_vars}')
    expression_set = ExpressionSet(n_vars, threshold, seed)
    rng = np.random.default_rng(seed)
    for i in range(1, max_depth + 1):
        remaining = threshold - len(expression_set)
        if remaining <= 0 or not expression_set.levels[-1]:
            break
        forms, stats = _stream_level(
            expression_set.levels, i, expression_set.index, remaining, rng,
            unary_ops, binary_ops, n_jobs, node_cap, block_size, progress,
        )
        expression_set.levels.append(forms)
        expression_set.stats.levels.append(stats)
        LOGGER.info(
            f'level {i}: {stats.candidates} candidates, {stats.unique} new, kept {stats.kept} '
            f'(duplicates={stats.duplicates}, constants={stats.constants_dropped}, '
            f'cap={stats.cap_dropped}, errors={stats.errors_dropped})'
        )
        if stats.sampled:
            LOGGER.info(f'level {i} sampled down to {stats.kept} of {stats.unique}; stopping')
            break
    expression_set.index = {form.string for form in expression_set}
    return expression_set
