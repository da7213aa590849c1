__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


from unittest import TestCase

import numpy as np
import torch

from symscale.ml.batching import BatchStream, CellGrid, collate, encode_pair, encode_pairs
from symscale.tests.utility_for_testing import make_pair
from symscale.tokens.vocabulary import build_vocabulary


VOCABULARY = build_vocabulary(2)


class TestEncoding(TestCase):

    def test_cell_grid(self):
        pair = make_pair('x1 + x2', n_points=10)
        grid = CellGrid.from_pair(pair)
        self.assertEqual((10, 3), grid.shape)
        self.assertEqual(np.float32, grid.mantissas.dtype)
        decoded = grid.mantissas.astype(np.float64) * 10.0 ** grid.exponents
        np.testing.assert_allclose(decoded[:, 2], pair.targets, rtol=1e-4)
        mantissas, exponents = grid.tensors()
        self.assertEqual(torch.int64, exponents.dtype)

    def test_collate_pads(self):
        items = encode_pairs([make_pair('x1'), make_pair('exp(x1)/x2')], VOCABULARY)
        batch = collate(items, VOCABULARY.pad_id)
        lengths = [len(item.token_ids) for item in items]
        self.assertEqual((2, max(lengths)), tuple(batch.tokens.shape))
        self.assertEqual(VOCABULARY.pad_id, int(batch.tokens[0, -1]))
        self.assertEqual(sum(lengths) - 2, batch.n_output_tokens)
        self.assertTrue(torch.equal(batch.tokens[:, 1:], batch.labels))
        self.assertTrue(torch.equal(batch.tokens[:, :-1], batch.decoder_inputs))
        self.assertEqual(2 * 32 * 3, batch.n_input_cells)

    def test_encode_pair_tokens(self):
        item = encode_pair(make_pair('x1 + x2'), VOCABULARY)
        expected = [VOCABULARY.bos_id] + [VOCABULARY.id_of(t) for t in ('x_{1}', '+', 'x_{2}')] + [VOCABULARY.eos_id]
        self.assertEqual(expected, item.token_ids.tolist())
        self.assertEqual(4, item.n_output_tokens)


class TestBatchStream(TestCase):

    def test_epochs_are_permutations(self):
        stream = BatchStream(10, 5, seed=0)
        first = stream.next_indices() + stream.next_indices()
        second = stream.next_indices() + stream.next_indices()
        self.assertEqual(list(range(10)), sorted(first))
        self.assertEqual(list(range(10)), sorted(second))
        self.assertNotEqual(first, second)
        self.assertEqual(2, stream.epoch)

    def test_batches_cross_epochs(self):
        stream = BatchStream(3, 4, seed=1)
        indices = stream.next_indices()
        self.assertEqual(4, len(indices))
        self.assertEqual(4, stream.position)

    def test_resume_from_state(self):
        stream = BatchStream(7, 3, seed=2)
        for _ in range(4):
            stream.next_indices()
        resumed = BatchStream(7, 3, seed=0)
        resumed.load_state_dict(stream.state_dict())
        self.assertEqual([stream.next_indices() for _ in range(5)], [resumed.next_indices() for _ in range(5)])

    def test_empty(self):
        with self.assertRaises(ValueError):
            BatchStream(0, 4, seed=0)
