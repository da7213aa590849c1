__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


import json
import tempfile
from pathlib import Path
from unittest import TestCase

import numpy as np

from symscale.data.shards import HEADER, read_shard, write_jsonl, write_shard
from symscale.exceptions import DataError
from symscale.tests.utility_for_testing import make_pair


class TestShards(TestCase):

    def setUp(self):
        self.pairs = [make_pair('x1*x2 + 3', n_points=8, seed=1), make_pair('sin(x1)/x2', n_points=8, seed=2)]
        self.directory = tempfile.TemporaryDirectory()
        self.path = Path(self.directory.name) / 'train-00000.syms'

    def tearDown(self):
        self.directory.cleanup()

    def test_round_trip(self):
        write_shard(self.path, self.pairs, 8, 2)
        loaded = read_shard(self.path)
        self.assertEqual(2, len(loaded))
        for original, pair in zip(self.pairs, loaded):
            self.assertEqual(original.expression.string, pair.expression.string)
            np.testing.assert_array_equal(original.inputs, pair.inputs)
            np.testing.assert_array_equal(original.targets.astype(np.float32), pair.targets)
            self.assertEqual(np.float64, pair.targets.dtype)
            self.assertEqual(original.seed, pair.seed)
            self.assertIsNone(pair.expression_id)

    def test_wrong_shape(self):
        with self.assertRaises(DataError):
            write_shard(self.path, self.pairs, 16, 2)

    def test_bad_files(self):
        write_shard(self.path, self.pairs, 8, 2)
        data = self.path.read_bytes()
        self.path.write_bytes(data[:-3])
        with self.assertRaises(DataError):
            read_shard(self.path)
        self.path.write_bytes(b'NOPE' + data[4:])
        with self.assertRaises(DataError):
            read_shard(self.path)
        self.path.write_bytes(data[:HEADER.size - 1])
        with self.assertRaises(DataError):
            read_shard(self.path)

    def test_jsonl_mirror(self):
        mirror = self.path.with_suffix('.jsonl')
        write_jsonl(mirror, self.pairs)
        records = [json.loads(line) for line in mirror.read_text(encoding='utf-8').splitlines()]
        self.assertEqual(['x1*x2 + 3', 'sin(x1)/x2'], [record['expression'] for record in records])
        self.assertEqual(8, len(records[0]['inputs']))
        self.assertEqual(self.pairs[1].seed, records[1]['seed'])
