# WP_Constants is a library of utilities for weak parallelogram laws in L^p
#
# MIT License
#
# Copyright (c) 2026 WP_Constants contributors
# Author: WP_Constants contributors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import math
import unittest

import numpy as np
from hypothesis import given, settings
from hypothesis.strategies import floats, integers, lists

from wpc.kernel.scalar import eval_h_grid, two_point_defect
from wpc.solver.optimal import minimize_h
from wpc.utils.params import DomainError, IncompatibleVectors, Law, Params, UnsupportedDomain
from wpc.utils.sampling import sample_pairs
from wpc.vectors.inequalities import antipodal_defect, clarkson_defect, extremal_pair, \
    extremal_required_constant, extremal_required_constants, extremal_supremum, hanner_defect, lwp_chain, \
    normalized, power_mean_gap, wp_defect, wp_defects
from wpc.vectors.lp_vector import LpVector, p_norm


class TestLpVector(unittest.TestCase):
    def test_norms(self):
        self.assertAlmostEqual(LpVector(2.0, [3.0, 4.0]).norm(), 5.0, places=14)
        for p in [1.5, 2.0, 3.0]:
            self.assertAlmostEqual(LpVector(p, [1.0, 1.0]).norm(), 2.0 ** (1.0 / p), places=14)
            self.assertAlmostEqual(LpVector(p, [0.3, 1.0]).norm(), (1.0 + 0.3 ** p) ** (1.0 / p), places=14)
        self.assertEqual(LpVector(1.5, [0.0, 0.0, 0.0]).norm(), 0.0)

    def test_extreme_magnitudes(self):
        self.assertAlmostEqual(p_norm(LpVector(2.0, [3e200, 4e200])) / 5e200, 1.0, places=14)
        self.assertAlmostEqual(p_norm(LpVector(2.0, [3e-200, 4e-200])) / 5e-200, 1.0, places=14)

    @settings(max_examples=100, deadline=None)
    @given(floats(1.1, 6.0), lists(integers(-50, 50), min_size=1, max_size=6), floats(-20.0, 20.0))
    def test_homogeneous(self, p, coords, scalar):
        x = LpVector(p, coords)
        expected = abs(scalar) * x.norm()
        self.assertAlmostEqual((scalar * x).norm(), expected, delta=1e-12 * (1.0 + expected))

    def test_arithmetic(self):
        x = LpVector(1.5, [1.0, 2.0])
        y = LpVector(1.5, [0.5, -1.0])
        self.assertEqual(x + y, LpVector(1.5, [1.5, 1.0]))
        self.assertEqual(x - y, LpVector(1.5, [0.5, 3.0]))
        self.assertEqual(-x, LpVector(1.5, [-1.0, -2.0]))
        self.assertEqual(2 * x, LpVector(1.5, [2.0, 4.0]))
        self.assertTrue(LpVector(1.5, [0.0, 0.0]).is_zero())
        self.assertEqual(LpVector.basis(3.0, 3, 1).to_list(), [0.0, 1.0, 0.0])

    def test_incompatible(self):
        with self.assertRaises(IncompatibleVectors):
            LpVector(1.5, [1.0, 2.0]) + LpVector(1.5, [1.0])
        with self.assertRaises(IncompatibleVectors):
            LpVector(1.5, [1.0, 2.0]) + LpVector(2.0, [1.0, 2.0])

    def test_invalid(self):
        for coords in [[], [1.0, math.nan], [math.inf], [[1.0, 2.0]]]:
            with self.assertRaises(DomainError):
                LpVector(1.5, coords)
        with self.assertRaises(DomainError):
            LpVector(1.0, [1.0])

    def test_immutable(self):
        x = LpVector(1.5, [1.0, 2.0])
        with self.assertRaises(ValueError):
            x.coords[0] = 5.0


class TestWeakParallelogram(unittest.TestCase):
    def test_equal_vectors(self):
        x = LpVector(1.5, [1.0, 2.0, -0.5])
        for C in [0.1, 0.7, 3.0]:
            self.assertAlmostEqual(wp_defect(x, x, 2.5, C, Law.LWP), 0.0, delta=1e-10)

    def test_antipodal(self):
        x = LpVector(1.5, [1.0, 2.0])
        for C in [0.5, 1.0, 1.2]:
            expected = 2.0 ** 2.5 * x.norm() ** 2.5 * (1.0 - C)
            self.assertAlmostEqual(wp_defect(x, -x, 2.5, C, Law.LWP), expected, delta=1e-10)
            self.assertAlmostEqual(antipodal_defect(x, 2.5, C, Law.UWP), -expected, delta=1e-10)
        self.assertLess(antipodal_defect(x, 2.5, 1.2, Law.LWP), 0.0)

    def test_homogeneous(self):
        x = LpVector(1.5, [1.0, 2.0])
        y = LpVector(1.5, [-0.3, 0.8])
        base = wp_defect(x, y, 2.5, 0.7, Law.LWP)
        self.assertAlmostEqual(wp_defect(3.0 * x, 3.0 * y, 2.5, 0.7, Law.LWP), 3.0 ** 2.5 * base, places=10)

    def test_rejects_bad_input(self):
        x = LpVector(1.5, [1.0, 2.0])
        with self.assertRaises(IncompatibleVectors):
            wp_defect(x, LpVector(1.5, [1.0]), 2.5, 0.7, Law.LWP)
        with self.assertRaises(DomainError):
            wp_defect(x, x, 2.5, -1.0, Law.LWP)

    def test_holds_with_optimal_constant(self):
        C = minimize_h(1.5, 2.5).value
        for dim in [1, 2, 3]:
            xs, ys = sample_pairs(11, 1, 500, dim)
            for x_coords, y_coords in zip(xs, ys):
                x, y = LpVector(1.5, x_coords), LpVector(1.5, y_coords)
                scale = 2.0 ** 1.5 * (x.norm() ** 2.5 + y.norm() ** 2.5)
                self.assertGreaterEqual(wp_defect(x, y, 2.5, C, Law.LWP), -1e-9 * scale)

    def test_holds_on_sampled_batches(self):
        p, r = 7.0 / 4.0, 11.0 / 5.0
        C = minimize_h(p, r).value
        for dim in [1, 2, 3, 4, 8]:
            xs, ys = sample_pairs(2024, 1, 10000, dim)
            defects = normalized(*wp_defects(xs, ys, p, r, C, Law.LWP))
            self.assertGreaterEqual(defects.min(), -1e-9, dim)

    def test_power_mean_gap_in_dimension_one(self):
        x = LpVector(1.5, [1.3])
        y = LpVector(1.5, [-0.4])
        expected = wp_defect(x, y, 2.5, 0.7, Law.LWP) - two_point_defect(Params(1.5, 2.5), 0.7, 1.3, -0.4)
        self.assertAlmostEqual(power_mean_gap(x, y, 2.5), expected, places=12)
        self.assertGreaterEqual(power_mean_gap(x, y, 2.5), 0.0)


class TestExtremal(unittest.TestCase):
    def test_pair(self):
        a, b = extremal_pair(0.0, 1.5)
        self.assertEqual(a.to_list(), [0.0, 1.0])
        self.assertEqual(b.to_list(), [1.0, 0.0])
        a, b = extremal_pair(0.5, 2.0, dim=4)
        self.assertAlmostEqual((a + b).norm(), 1.5 * math.sqrt(2.0), places=14)
        self.assertAlmostEqual((a - b).norm(), 0.5 * math.sqrt(2.0), places=14)
        with self.assertRaises(DomainError):
            extremal_pair(0.5, 2.0, dim=1)
        with self.assertRaises(DomainError):
            extremal_pair(1.0, 2.0)

    def test_required_constant(self):
        self.assertAlmostEqual(extremal_required_constant(1.5, 2.5, 0.027307), 0.777545, delta=1e-5)
        for t in [0.0, 0.3, 0.9]:
            self.assertAlmostEqual(extremal_required_constant(2.0, 2.0, t, Law.UWP), 1.0, places=10)

    def test_required_constant_near_one(self):
        self.assertAlmostEqual(extremal_required_constant(4.0, 2.0, 1.0 - 1e-5, Law.UWP), 3.0, delta=1e-3)
        supremum, _ = extremal_supremum(4.0, 2.0)
        self.assertAlmostEqual(supremum, 3.0, delta=1e-3)
        self.assertLessEqual(supremum, 3.0 + 1e-12)

    def test_identity_with_h_near_one(self):
        ts = 1.0 - np.array([1e-3, 1e-5, 1e-7, 2e-8])
        for p, r in [(1.5, 2.0), (1.6905, 2.0), (4.0, 2.0), (1.5, 2.000001)]:
            required = extremal_required_constants(p, r, ts)
            h = eval_h_grid(Params(p, r), ts)
            self.assertLessEqual(np.max(np.abs(required - h) / h), 1e-9, (p, r))

    def test_identity_with_h(self):
        ts = np.linspace(0.0, 0.999, 200)
        for p, r in [(1.5, 2.5), (1.75, 2.2), (1.2, 3.0)]:
            required = extremal_required_constants(p, r, ts)
            h = eval_h_grid(Params(p, r), ts)
            self.assertLessEqual(np.max(np.abs(required - h) / np.abs(h)), 1e-11)

    def test_defect_vanishes_at_minimiser(self):
        result = minimize_h(1.5, 2.5)
        a, b = extremal_pair(result.argmin_t, 1.5)
        scale = 2.0 ** 1.5 * (a.norm() ** 2.5 + b.norm() ** 2.5)
        self.assertAlmostEqual(wp_defect(a, b, 2.5, result.value, Law.LWP) / scale, 0.0, places=12)
        self.assertLess(wp_defect(a, b, 2.5, result.value * 1.001, Law.LWP), 0.0)


class TestHannerClarkson(unittest.TestCase):
    def test_hanner_values(self):
        F = LpVector(1.5, [1.0, 0.0])
        G = LpVector(1.5, [0.0, 1.0])
        self.assertAlmostEqual(hanner_defect(F, G), 4.0 - 2.0 ** 1.5, places=12)
        self.assertAlmostEqual(hanner_defect(F, 0.0 * G), 0.0, places=14)
        self.assertAlmostEqual(hanner_defect(LpVector(2.0, [1.0, 2.0]), LpVector(2.0, [3.0, -1.0])), 0.0,
                               places=12)

    def test_hanner_rejects_large_p(self):
        with self.assertRaises(UnsupportedDomain):
            hanner_defect(LpVector(3.0, [1.0, 0.0]), LpVector(3.0, [0.0, 1.0]))

    def test_clarkson_values(self):
        f = LpVector(1.5, [1.0, 0.0])
        g = LpVector(1.5, [0.0, 1.0])
        self.assertAlmostEqual(clarkson_defect(f, g), 4.0 - 2.0 ** 0.5 * 2.0, places=12)
        self.assertAlmostEqual(clarkson_defect(f, f), 0.0, places=12)
        self.assertAlmostEqual(clarkson_defect(LpVector(2.0, [1.0, 2.0]), LpVector(2.0, [3.0, -1.0])), 0.0,
                               places=12)
        self.assertAlmostEqual(clarkson_defect(LpVector(3.0, [1.0, 0.0]), LpVector(3.0, [0.0, 1.0])), 4.0,
                               places=12)

    def test_hold_on_samples(self):
        fs, gs = sample_pairs(5, 2, 500, 3)
        for p in [1.25, 1.5, 1.75, 2.5, 3.0, 4.0]:
            for f_coords, g_coords in zip(fs, gs):
                f, g = LpVector(p, f_coords), LpVector(p, g_coords)
                scale = 2.0 ** (p - 1.0) * (f.norm() ** p + g.norm() ** p)
                self.assertGreaterEqual(clarkson_defect(f, g), -1e-9 * scale)
                if p <= 2.0:
                    self.assertGreaterEqual(hanner_defect(f, g), -1e-9 * (f.norm() + g.norm()) ** p)


class TestLwpChain(unittest.TestCase):
    def test_every_link_holds(self):
        C = minimize_h(1.5, 2.5).value
        fs, gs = sample_pairs(3, 8, 300, 3)
        for f_coords, g_coords in zip(fs, gs):
            steps = lwp_chain(LpVector(1.5, f_coords), LpVector(1.5, g_coords), 2.5, C)
            self.assertEqual([step.name for step in steps], ["substitution", "two-point", "hanner", "power-mean"])
            for step in steps:
                self.assertTrue(step.holds(1e-9), step)

    def test_outside_range(self):
        f = LpVector(2.5, [1.0, 0.0])
        with self.assertRaises(DomainError):
            lwp_chain(f, f, 2.5, 1.0)


if __name__ == "__main__":
    unittest.main()
