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

from wpc.derived.nj_james import DerivedBound, DerivedConstantsReport, derived_constants, empirical_constants, \
    james_ratios, nj_james_bounds, nj_ratios, polish_pair, record_indices
from wpc.utils.params import DomainError, Law
from wpc.utils.sampling import sample_pairs


class TestBounds(unittest.TestCase):
    def test_hilbert_space(self):
        report = nj_james_bounds(2.0)
        self.assertEqual(report.nj_upper_bound, 1.0)
        asserted = [bound for bound in report.james_upper_bounds if bound.asserted]
        for bound in asserted:
            self.assertEqual(bound.part, "iii")
            self.assertAlmostEqual(bound.bound, math.sqrt(2.0), places=12)

    def test_small_p(self):
        report = nj_james_bounds(1.5)
        self.assertEqual(report.nj_upper_bound, 2.0)
        self.assertEqual(report.nj_bounds[0].part, "i")
        first = report.james_upper_bounds[0]
        self.assertEqual((first.part, first.r, first.constant), ("iii", 2.0, 0.5))
        self.assertAlmostEqual(first.bound, 2.0 / 1.5 ** 0.5, places=12)
        self.assertAlmostEqual(first.bound, 1.63299, delta=1e-5)

    def test_large_p(self):
        report = nj_james_bounds(4.0)
        variants = {bound.variant: bound for bound in report.nj_bounds}
        self.assertAlmostEqual(variants["paper"].bound, 27.0, places=9)
        self.assertAlmostEqual(variants["duality"].bound, 3.0, places=9)
        self.assertEqual(report.nj_upper_bound, variants["duality"].bound)
        self.assertTrue(all(bound.source_law is Law.LWP for bound in report.james_upper_bounds if bound.asserted))

    def test_printed_upper_law_bound_is_not_asserted(self):
        report = nj_james_bounds(4.0)
        printed = [bound for bound in report.james_upper_bounds if bound.variant == "printed"]
        self.assertEqual(len(printed), 1)
        self.assertFalse(printed[0].asserted)
        # the l^4 James constant 2^{3/4} exceeds the printed value 2^{1/4}
        self.assertLess(printed[0].bound, 2.0 ** 0.75)


class TestRatios(unittest.TestCase):
    def test_zero_pairs(self):
        zeros = np.zeros((1, 2))
        self.assertEqual(nj_ratios(zeros, zeros, 1.5)[0], 1.0)
        self.assertEqual(james_ratios(zeros, np.ones((1, 2)), 1.5)[0], 0.0)

    def test_scale_invariant(self):
        xs, ys = sample_pairs(4, 6, 200, 3)
        for ratios in (nj_ratios, james_ratios):
            np.testing.assert_allclose(ratios(3.7 * xs, 3.7 * ys, 1.5), ratios(xs, ys, 1.5), rtol=1e-12)

    def test_known_pairs(self):
        x = np.array([[1.0, 0.0]])
        y = np.array([[0.0, 1.0]])
        self.assertAlmostEqual(james_ratios(x, y, 2.0)[0], math.sqrt(2.0), places=14)
        self.assertAlmostEqual(nj_ratios(x, y, 1.5)[0], 2.0 ** (4.0 / 3.0) / 2.0, places=14)

    def test_record_indices(self):
        self.assertEqual(record_indices([1, 3, 2, 5, 5, 4, 6]), [0, 1, 3, 6])
        self.assertEqual(record_indices([]), [])

    def test_polish_never_lowers(self):
        xs, ys = sample_pairs(8, 7, 20, 2)
        for x, y in zip(xs, ys):
            start = james_ratios(x[None, :], y[None, :], 1.5)[0]
            self.assertGreaterEqual(polish_pair(james_ratios, x, y, 1.5), start)


class TestEmpirical(unittest.TestCase):
    def test_hilbert_space(self):
        report = empirical_constants(2.0, 2, 2000, 42)
        self.assertAlmostEqual(report.nj_estimate, 1.0, delta=1e-6)
        self.assertAlmostEqual(report.james_estimate, math.sqrt(2.0), delta=1e-3)

    def test_small_p_below_bounds(self):
        report = derived_constants(1.5, 2, 500, 42)
        self.assertLessEqual(report.nj_estimate, 2.0 + 1e-6)
        self.assertLessEqual(report.james_estimate, 2.0 / 1.5 ** 0.5 + 1e-6)
        self.assertGreater(report.nj_estimate, 1.0)
        self.assertTrue(report.consistent())
        self.assertEqual(report.to_dict()["breaches"], [])

    def test_monotone_in_samples(self):
        fewer = empirical_constants(1.5, 3, 200, 5)
        more = empirical_constants(1.5, 3, 400, 5)
        self.assertGreaterEqual(more.nj_estimate, fewer.nj_estimate)
        self.assertGreaterEqual(more.james_estimate, fewer.james_estimate)

    def test_independent_of_workers(self):
        serial = empirical_constants(3.0, 2, 1500, 11, workers=1)
        threaded = empirical_constants(3.0, 2, 1500, 11, workers=3)
        self.assertEqual(serial, threaded)

    def test_rejects_bad_input(self):
        with self.assertRaises(DomainError):
            empirical_constants(1.5, 1, 10, 1)
        with self.assertRaises(DomainError):
            empirical_constants(1.5, 2, 0, 1)


class TestBreaches(unittest.TestCase):
    def test_only_asserted_bounds_breach(self):
        asserted = DerivedBound("iii", Law.LWP, 2.0, 0.5, 1.5)
        reported = DerivedBound("iv", Law.UWP, 1.5, 1.0, 1.2, asserted=False, variant="printed")
        report = DerivedConstantsReport(1.5, james_upper_bounds=[asserted, reported], james_estimate=1.4)
        self.assertTrue(report.consistent())
        report = DerivedConstantsReport(1.5, james_upper_bounds=[asserted, reported], james_estimate=1.6)
        self.assertEqual(report.breaches(), [asserted])
        self.assertFalse(report.consistent())


if __name__ == "__main__":
    unittest.main()
