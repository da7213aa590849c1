__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


import json
import tempfile
from pathlib import Path
from unittest import TestCase

import pytest

from symscale.config.pipeline import with_overrides
from symscale.data.corpus import MANIFEST_FILE, Corpus, build_corpus, choose_split_expressions, open_corpus
from symscale.exceptions import ArtifactHashError, ChecksumError, DataError
from symscale.expressions.generator import ExpressionSet, build_expression_set
from symscale.tests.utility_for_testing import tiny_config


class TestCorpus(TestCase):

    @classmethod
    def setUpClass(cls):
        cls.config = tiny_config()
        cls.expression_set = build_expression_set(2, 1, 15)
        cls.directory = tempfile.TemporaryDirectory()
        cls.root = Path(cls.directory.name)
        cls.manifest = build_corpus(cls.expression_set, cls.config, cls.root / 'corpus', fmt='both')

    @classmethod
    def tearDownClass(cls):
        cls.directory.cleanup()

    def test_manifest(self):
        splits = self.manifest['splits']
        train = splits['train']
        self.assertEqual(15 * 2, train['attempts'])
        self.assertEqual(train['n_pairs'] + sum(train['rejections'].values()), train['attempts'])
        self.assertEqual(4, splits['validation']['n_pairs'] + splits['validation']['dropped'])
        shard = train['shards'][0]
        self.assertTrue(shard['file'].endswith('.syms'))
        self.assertTrue(shard['jsonl'].endswith('.jsonl'))
        with open(self.root / 'corpus' / MANIFEST_FILE, 'r', encoding='utf-8') as f:
            self.assertEqual(self.manifest, json.load(f))

    def test_open_and_read(self):
        corpus = open_corpus(self.root / 'corpus', self.config)
        self.assertEqual((2, 16), (corpus.n_vars, corpus.n_points))
        for split in ('train', 'validation', 'test'):
            pairs = corpus.pairs(split)
            self.assertEqual(corpus.split_size(split), len(pairs))
            for pair in pairs:
                self.assertEqual((16, 2), pair.inputs.shape)

    def test_splits_do_not_share_triples(self):
        corpus = Corpus.open(self.root / 'corpus')
        keys = {split: {pair.triple_key() for pair in corpus.pairs(split)} for split in ('train', 'validation', 'test')}
        self.assertFalse(keys['train'] & keys['test'])
        self.assertFalse(keys['train'] & keys['validation'])
        self.assertFalse(keys['validation'] & keys['test'])

    def test_rebuild_is_identical(self):
        manifest = build_corpus(self.expression_set, self.config, self.root / 'again', fmt='both')
        self.assertEqual(self.manifest, manifest)

    def test_digest_checked(self):
        other = with_overrides(self.config, seed=9)
        with self.assertRaises(ArtifactHashError):
            open_corpus(self.root / 'corpus', other)
        self.assertEqual(self.manifest, open_corpus(self.root / 'corpus', other, force=True).manifest)

    def test_tampered_shard(self):
        build_corpus(self.expression_set, self.config, self.root / 'tampered')
        shard = self.root / 'tampered' / self.manifest['splits']['test']['shards'][0]['file']
        shard.write_bytes(shard.read_bytes() + b'\0')
        with self.assertRaises(ChecksumError):
            Corpus.open(self.root / 'tampered')

    def test_missing_and_empty(self):
        with self.assertRaises(DataError):
            Corpus.open(self.root / 'nowhere')
        empty = ExpressionSet(2, 10)
        empty.levels = []
        with self.assertRaises(DataError):
            build_corpus(empty, self.config, self.root / 'empty')
        with self.assertRaises(ValueError):
            build_corpus(self.expression_set, self.config, self.root / 'bad', fmt='csv')

    def test_split_choice(self):
        chosen = choose_split_expressions(15, 4, 0, 'test')
        self.assertEqual(chosen, choose_split_expressions(15, 4, 0, 'test'))
        self.assertEqual(4, len({expression_id for expression_id, _ in chosen}))
        repeated = choose_split_expressions(3, 7, 0, 'validation')
        self.assertEqual(7, len(set(repeated)))
        self.assertEqual(sorted(repeated), repeated)

    @pytest.mark.slow
    def test_workers_do_not_change_output(self):
        manifest = build_corpus(self.expression_set, self.config, self.root / 'parallel', n_jobs=2)
        for split in ('train', 'validation', 'test'):
            self.assertEqual([shard['sha256'] for shard in self.manifest['splits'][split]['shards']],
                             [shard['sha256'] for shard in manifest['splits'][split]['shards']])
