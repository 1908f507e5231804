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

from wpc.kernel.search import golden_section, newton_bisection, scan_grid


class TestScanGrid(unittest.TestCase):
    def test_endpoints_and_order(self):
        grid = scan_grid(4096, 1.0 - 1e-8)
        self.assertEqual(grid[0], 0.0)
        self.assertEqual(grid[-1], 1.0 - 1e-8)
        self.assertTrue(np.all(np.diff(grid) > 0.0))

    def test_refined_near_both_ends(self):
        grid = scan_grid(4096, 1.0 - 1e-8)
        self.assertTrue(np.any((grid > 0.0) & (grid < 1e-10)))
        self.assertTrue(np.any((grid > 1.0 - 1e-7) & (grid < 1.0 - 1e-8)))

    def test_coarse_end_without_refinement(self):
        grid = scan_grid(100, 0.5)
        self.assertEqual(grid[-1], 0.5)
        self.assertLessEqual(grid.max(), 0.5)


class TestGoldenSection(unittest.TestCase):
    def test_quadratic(self):
        result = golden_section(lambda t: (t - 0.3) ** 2, 0.0, 1.0, 1e-10, 200)
        self.assertTrue(result.converged)
        self.assertAlmostEqual(result.t, 0.3, delta=1e-6)
        self.assertLessEqual(result.hi - result.lo, 1e-10)

    def test_monotone_returns_better_end(self):
        result = golden_section(lambda t: t, 0.0, 1.0, 1e-8, 200)
        self.assertEqual(result.t, 0.0)
        result = golden_section(lambda t: -t, 0.0, 1.0, 1e-8, 200)
        self.assertEqual(result.t, 1.0)

    def test_iteration_cap(self):
        result = golden_section(lambda t: (t - 0.3) ** 2, 0.0, 1.0, 1e-10, 5)
        self.assertFalse(result.converged)
        self.assertEqual(result.iterations, 5)


class TestNewtonBisection(unittest.TestCase):
    def test_square_root(self):
        result = newton_bisection(lambda x: x * x - 2.0, lambda x: 2.0 * x, 1.0, 2.0, 1e-14, 50)
        self.assertTrue(result.converged)
        self.assertAlmostEqual(result.t, math.sqrt(2.0), places=12)

    def test_flat_slope_falls_back_to_bisection(self):
        result = newton_bisection(lambda x: x - 0.25, lambda x: 0.0, 0.0, 1.0, 1e-12, 100)
        self.assertTrue(result.converged)
        self.assertAlmostEqual(result.t, 0.25, places=10)


if __name__ == "__main__":
    unittest.main()
