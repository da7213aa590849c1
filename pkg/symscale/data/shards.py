"""Binary corpus shards and their JSONL mirror.

Layout (little-endian)::

    header   magic b"SYMS" | version u32 | n_pairs u32 | n_points u16 | n_vars u16
    per pair length u32 | canonical string (UTF-8)
             inputs  float32[n_points * n_vars], row-major
             targets float32[n_points]
             seed    u64

Expression ids are not part of the layout; pairs read back carry
``expression_id=None``.
"""

__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


# standard library
import json
import struct
from pathlib import Path
from typing import BinaryIO, Iterator, List, Sequence, Union

# third-party imports
import numpy as np

# symscale
from symscale.data.pairs import ExprDatasetPair
from symscale.exceptions import DataError
from symscale.expressions.canonical import CanonicalForm


SHARD_MAGIC: bytes = b'SYMS'
SHARD_VERSION: int = 1
HEADER = struct.Struct('<4sIIHH')
LENGTH = struct.Struct('<I')
SEED = struct.Struct('<Q')


def write_shard(
    path: Union[Path, str],
    pairs: Sequence[ExprDatasetPair],
    n_points: int,
    n_vars: int,
) -> None:
    with open(path, 'wb') as f:
        f.write(HEADER.pack(SHARD_MAGIC, SHARD_VERSION, len(pairs), n_points, n_vars))
        for pair in pairs:
            if pair.inputs.shape != (n_points, n_vars):
                raise DataError(f'pair inputs have shape {pair.inputs.shape}, expected {(n_points, n_vars)}')
            encoded = pair.expression.string.encode('utf-8')
            f.write(LENGTH.pack(len(encoded)))
            f.write(encoded)
            f.write(np.ascontiguousarray(pair.inputs, dtype='<f4').tobytes())
            f.write(np.ascontiguousarray(pair.targets, dtype='<f4').tobytes())
            f.write(SEED.pack(pair.seed))


def _read_exact(f: BinaryIO, size: int, path) -> bytes:
    data = f.read(size)
    if len(data) != size:
        raise DataError(f'truncated shard {path}')
    return data


def iter_shard(path: Union[Path, str]) -> Iterator[ExprDatasetPair]:
    """
    Stream the pairs of one shard.

    Raises:
        DataError:
            Raised on a wrong magic number, an unknown version or a truncated
            file.
    """
    with open(path, 'rb') as f:
        magic, version, n_pairs, n_points, n_vars = HEADER.unpack(_read_exact(f, HEADER.size, path))
        if magic != SHARD_MAGIC:
            raise DataError(f'{path} is not a corpus shard')
        if version != SHARD_VERSION:
            raise DataError(f'unsupported shard version {version} in {path}')
        inputs_size = 4 * n_points * n_vars
        for _ in range(n_pairs):
            (length,) = LENGTH.unpack(_read_exact(f, LENGTH.size, path))
            text = _read_exact(f, length, path).decode('utf-8')
            inputs = np.frombuffer(_read_exact(f, inputs_size, path), dtype='<f4')
            targets = np.frombuffer(_read_exact(f, 4 * n_points, path), dtype='<f4')
            (seed,) = SEED.unpack(_read_exact(f, SEED.size, path))
            yield ExprDatasetPair(
                expression=CanonicalForm.from_string(text),
                inputs=inputs.reshape(n_points, n_vars).astype(np.float64),
                targets=targets.astype(np.float64),
                seed=seed,
            )


def read_shard(path: Union[Path, str]) -> List[ExprDatasetPair]:
    return list(iter_shard(path))


def pair_to_record(pair: ExprDatasetPair) -> dict:
    return {
        'expression': pair.expression.string,
        'inputs': np.asarray(pair.inputs, dtype=np.float32).tolist(),
        'targets': np.asarray(pair.targets, dtype=np.float32).tolist(),
        'seed': pair.seed,
    }


def write_jsonl(path: Union[Path, str], pairs: Sequence[ExprDatasetPair]) -> None:
    """
    Debugging mirror of a shard: one JSON object per pair, values as stored.
    """
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        for pair in pairs:
            f.write(json.dumps(pair_to_record(pair), sort_keys=True) + '\n')
