__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


from unittest import TestCase

import torch

from symscale.config.pipeline import TrainConfig
from symscale.ml.model import SymbolicTransformer, decay_parameter_names
from symscale.ml.optimizer import DecoupledAdam, OptimizerStep
from symscale.ml.schedule import lr_schedule
from symscale.ml.tests.test_model import tiny_model_config


class TestDecoupledAdam(TestCase):

    def test_minimizes_quadratic(self):
        w = torch.zeros(1, requires_grad=True)
        optimizer = DecoupledAdam([w], weight_decay=0.0, clip_value=1e6)
        for step in range(500):
            optimizer.zero_grad()
            loss = ((w - 3.0) ** 2).sum()
            loss.backward()
            optimizer.step(lr_schedule(step + 1, 500, 0.1))
        self.assertAlmostEqual(3.0, float(w), places=4)

    def test_non_finite_gradient_skips(self):
        w = torch.ones(2, requires_grad=True)
        optimizer = DecoupledAdam([w])
        w.grad = torch.tensor([float('nan'), 1.0])
        outcome = optimizer.step(0.1)
        self.assertTrue(outcome.skipped)
        self.assertEqual(1, optimizer.skipped_steps)
        self.assertTrue(torch.equal(torch.ones(2), w.detach()))
        self.assertIsNone(w.grad)

    def test_clipping(self):
        w = torch.zeros(2, requires_grad=True)
        optimizer = DecoupledAdam([w], clip_value=1.0)
        w.grad = torch.tensor([3.0, 4.0])
        outcome = optimizer.step(0.01)
        self.assertAlmostEqual(5.0, outcome.grad_norm, places=5)
        self.assertAlmostEqual(1.0, float(w.grad.norm()), places=5)

    def test_decay_groups(self):
        model = SymbolicTransformer(tiny_model_config())
        names = decay_parameter_names(model)
        optimizer = DecoupledAdam.for_model(model, TrainConfig(weight_decay=0.2), names)
        groups = optimizer.optimizer.param_groups
        self.assertEqual([0.2, 0.0], [group['weight_decay'] for group in groups])
        self.assertEqual(len(names), len(groups[0]['params']))
        self.assertEqual(sum(1 for _ in model.parameters()), len(groups[0]['params']) + len(groups[1]['params']))

    def test_state_round_trip(self):
        w = torch.zeros(1, requires_grad=True)
        optimizer = DecoupledAdam([w])
        ((w - 1.0) ** 2).sum().backward()
        optimizer.step(0.1)
        state = optimizer.state_dict()
        other = DecoupledAdam([w])
        other.load_state_dict(state)
        self.assertEqual(1, len(other.optimizer.state))

    def test_subclass_needs_name(self):
        with self.assertRaises(NotImplementedError):
            class Nameless(OptimizerStep):
                def update(self, lr):
                    pass

                def state_dict(self):
                    return {}

                def load_state_dict(self, state):
                    pass
