__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


import tempfile
from pathlib import Path
from unittest import TestCase

from symscale.exceptions import VocabularyError
from symscale.tokens.vocabulary import BOS, EOS, PAD, Vocabulary, build_vocabulary


class TestVocabulary(TestCase):

    def test_layout(self):
        vocabulary = build_vocabulary(2)
        self.assertEqual(27, len(vocabulary))
        self.assertEqual([PAD, BOS, EOS], vocabulary.tokens[:3])
        self.assertEqual((0, 1, 2), (vocabulary.pad_id, vocabulary.bos_id, vocabulary.eos_id))
        self.assertEqual(2, vocabulary.n_vars)
        self.assertEqual('x_{2}', vocabulary.token_of(vocabulary.id_of('x_{2}')))
        self.assertEqual(28, len(build_vocabulary(3)))

    def test_unknown(self):
        vocabulary = build_vocabulary(2)
        with self.assertRaises(VocabularyError):
            vocabulary.id_of('x_{3}')
        with self.assertRaises(VocabularyError):
            vocabulary.token_of(27)

    def test_invalid_lists(self):
        with self.assertRaises(VocabularyError):
            Vocabulary([PAD, BOS, EOS, 'a', 'a'])
        with self.assertRaises(VocabularyError):
            Vocabulary([BOS, PAD, EOS])

    def test_save_load(self):
        vocabulary = build_vocabulary(2)
        with tempfile.TemporaryDirectory() as directory:
            path = Path(directory) / 'vocabulary.json'
            vocabulary.save(path)
            loaded = Vocabulary.load(path)
            self.assertEqual(vocabulary.to_json(), path.read_text(encoding='utf-8'))
        self.assertEqual(vocabulary, loaded)
        self.assertEqual(vocabulary.digest(), loaded.digest())
        self.assertNotEqual(vocabulary.digest(), build_vocabulary(3).digest())

    def test_version_checked(self):
        with self.assertRaises(VocabularyError):
            Vocabulary.from_json('{"tokens": ["<pad>", "<bos>", "<eos>"], "version": 99}')
