__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


import tempfile
from pathlib import Path
from unittest import TestCase

import torch

from symscale.exceptions import DataError, VocabularyError
from symscale.ml.checkpoint import Checkpoint, load_checkpoint, save_checkpoint
from symscale.ml.model import SymbolicTransformer
from symscale.ml.tests.test_model import random_inputs, tiny_model_config
from symscale.tokens.vocabulary import build_vocabulary


class TestCheckpoint(TestCase):

    def setUp(self):
        self.directory = tempfile.TemporaryDirectory()
        self.path = Path(self.directory.name) / 'run' / 'checkpoint.pt'
        torch.manual_seed(0)
        self.model = SymbolicTransformer(tiny_model_config()).eval()
        self.vocabulary = build_vocabulary(2)
        save_checkpoint(self.path, Checkpoint(self.model.config, self.vocabulary, self.model.state_dict(), step=7,
                                              rng_state=torch.get_rng_state(), extra={'note': 'x'}))

    def tearDown(self):
        self.directory.cleanup()

    def test_round_trip(self):
        checkpoint = load_checkpoint(self.path, self.vocabulary)
        self.assertEqual(7, checkpoint.step)
        self.assertEqual({'note': 'x'}, checkpoint.extra)
        self.assertEqual(self.model.config, checkpoint.model_config)
        restored = checkpoint.build_model().eval()
        mantissas, exponents, tokens = random_inputs()
        with torch.no_grad():
            self.assertTrue(torch.equal(self.model(mantissas, exponents, tokens),
                                        restored(mantissas, exponents, tokens)))
        self.assertEqual(['checkpoint.pt'], [p.name for p in self.path.parent.iterdir()])

    def test_vocabulary_mismatch(self):
        with self.assertRaises(VocabularyError):
            load_checkpoint(self.path, build_vocabulary(3))

    def test_bad_files(self):
        with self.assertRaises(DataError):
            load_checkpoint(self.path.with_name('missing.pt'))
        payload = torch.load(self.path, weights_only=False)
        payload['version'] = 99
        torch.save(payload, self.path)
        with self.assertRaises(DataError):
            load_checkpoint(self.path)
