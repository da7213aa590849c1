__author__ = "Symscale Developers"
__copyright__ = "Copyright 2026, Symscale Developers"
__license__ = "MIT"
__version__ = "0.1.0"
__maintainer__ = "Symscale Developers"


from unittest import TestCase

import numpy as np

from symscale.expressions.tree import Binary, BinaryOp, IntConstant, Unary, UnaryOp, Variable, \
    depth, evaluate, evaluate_batch, iter_nodes, node_count, swap_variables, variables


X1, X2 = Variable(1), Variable(2)


class TestTree(TestCase):

    def test_variable_index(self):
        with self.assertRaises(ValueError):
            Variable(0)

    def test_shape_metrics(self):
        expr = Binary(BinaryOp.ADD, Unary(UnaryOp.SIN, X1), Binary(BinaryOp.MUL, X2, IntConstant(3)))
        self.assertEqual(2, depth(expr))
        self.assertEqual(6, node_count(expr))
        self.assertEqual({1, 2}, variables(expr))
        self.assertEqual(0, depth(X1))
        # pre-order
        kinds = [type(node).__name__ for node in iter_nodes(expr)]
        self.assertEqual(['Binary', 'Unary', 'Variable', 'Binary', 'Variable', 'IntConstant'], kinds)

    def test_evaluate_batch(self):
        expr = Binary(BinaryOp.DIV, Unary(UnaryOp.SQRT, X1), X2)
        inputs = np.array([[4.0, 2.0], [9.0, 3.0], [1.0, 0.5]])
        np.testing.assert_allclose(evaluate_batch(expr, inputs), [1.0, 1.0, 2.0])

    def test_constant_broadcasts(self):
        values = evaluate_batch(IntConstant(7), np.zeros((3, 2)))
        self.assertEqual((3,), values.shape)
        self.assertTrue(np.all(values == 7.0))

    def test_domain_violations_are_values(self):
        inputs = np.array([[-1.0, 0.0]])
        self.assertTrue(np.isnan(evaluate_batch(Unary(UnaryOp.SQRT, X1), inputs)[0]))
        self.assertTrue(np.isinf(evaluate_batch(Binary(BinaryOp.DIV, X1, X2), inputs)[0]))
        self.assertTrue(np.isinf(evaluate(Unary(UnaryOp.EXP, X1), [1000.0, 0.0])))

    def test_bad_inputs(self):
        with self.assertRaises(ValueError):
            evaluate_batch(X2, np.zeros((4, 1)))
        with self.assertRaises(ValueError):
            evaluate_batch(X1, np.zeros(4))

    def test_swap_variables(self):
        expr = Binary(BinaryOp.SUB, X1, Unary(UnaryOp.EXP, X2))
        swapped = swap_variables(expr, {1: 2, 2: 1})
        self.assertEqual(Binary(BinaryOp.SUB, X2, Unary(UnaryOp.EXP, X1)), swapped)
        self.assertAlmostEqual(evaluate(expr, [1.0, 2.0]), evaluate(swapped, [2.0, 1.0]))
