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

from collections import OrderedDict

import numpy as np

from wpc.harness.suites.base import VerificationSuite, worst_of
from wpc.kernel.scalar import dh_dr, eval_h_grid, eval_k
from wpc.kernel.search import scan_grid
from wpc.utils.constants import CURVE_T_MAX, K_GRID_POINTS, K_SYMMETRY_RTOL, K_T_RANGE, MONOTONE_R_POINTS, \
    MONOTONE_T_POINTS, MONOTONE_TOL
from wpc.utils.params import Law, Params


def _in_minimized_range(context):
    return Params(context.config.p, context.config.r).in_minimized_range()


class HPositivitySuite(VerificationSuite):
    name = "scalar-h-positivity"

    def applies(self, context):
        return _in_minimized_range(context)

    def run(self, context):
        params = Params(context.config.p, context.config.r)
        grid = scan_grid()
        values = eval_h_grid(params, grid)
        index = int(np.argmin(values))
        detail = OrderedDict([("minH", float(values[index])), ("atT", float(grid[index]))])
        return self.result(context, grid.size, values[index], OrderedDict([("t", float(grid[index]))]), detail,
                           passed=values[index] > 0.0)


class KNonnegativeSuite(VerificationSuite):
    """
    Checks k(t) >= 0 on [-10, 10] with the constant under test, the reflection k(-t) >= k(t) and the
    inversion symmetry k(t) = |t|^r k(1/t).
    """
    name = "scalar-k-nonnegative"

    def applies(self, context):
        return _in_minimized_range(context)

    def run(self, context):
        params = Params(context.config.p, context.config.r)
        p, r = params.p, params.r
        C = context.tested_constant(Law.LWP)
        ts = np.linspace(-K_T_RANGE, K_T_RANGE, K_GRID_POINTS)
        argmin = context.optimal(Law.LWP).argmin_t
        if argmin is not None and 0.0 < argmin < 1.0:
            ts = np.concatenate([ts, [argmin, -argmin]])
        k_values = np.array([eval_k(params, C, t) for t in ts])
        k_scales = 2.0 ** (r - r / p) * (1.0 + np.abs(ts) ** p) ** (r / p)

        positive = ts[ts > 0.0]
        reflection = np.array([eval_k(params, C, -t) - eval_k(params, C, t) for t in positive])
        reflection_scales = 2.0 ** (r - r / p) * (1.0 + positive ** p) ** (r / p)
        symmetry = np.array([abs(eval_k(params, C, t) - t ** r * eval_k(params, C, 1.0 / t)) / (1.0 + t) ** r
                             for t in positive])

        points = np.concatenate([ts, -positive])
        values, index = worst_of(np.concatenate([k_values, reflection]),
                                 np.concatenate([k_scales, reflection_scales]))
        max_symmetry = float(symmetry.max()) if symmetry.size else 0.0
        detail = OrderedDict([("constant", C), ("maxSymmetryError", max_symmetry)])
        passed = values[index] >= -context.config.slack and max_symmetry <= K_SYMMETRY_RTOL
        return self.result(context, points.size, values[index], OrderedDict([("t", float(points[index]))]),
                           detail, passed=passed)


class MonotoneRSuite(VerificationSuite):
    """h(p, r1, t) <= h(p, r2, t) + 1e-12 for consecutive r1 < r2 on a grid over [2, q]."""
    name = "scalar-monotone-r"

    def applies(self, context):
        return _in_minimized_range(context) and context.config.p < 2.0

    def run(self, context):
        p = context.config.p
        q = Params(p, 2.0).q
        rs = np.linspace(2.0, q, MONOTONE_R_POINTS)
        ts = np.linspace(0.0, CURVE_T_MAX, MONOTONE_T_POINTS)
        curves = [eval_h_grid(Params(p, r), ts) for r in rs]
        gaps = []
        scales = []
        witnesses = []
        for lower, upper, r1, r2 in zip(curves, curves[1:], rs, rs[1:]):
            gaps.append(upper - lower + MONOTONE_TOL)
            scales.append(np.maximum(1.0, np.abs(upper)))
            witnesses += [(r1, r2, t) for t in ts]
        values, index = worst_of(np.concatenate(gaps), np.concatenate(scales))
        slopes = [dh_dr(Params(p, r), t) for r in rs for t in ts]
        r1, r2, t = witnesses[index]
        witness = OrderedDict([("r1", float(r1)), ("r2", float(r2)), ("t", float(t))])
        detail = OrderedDict([("minDhDr", float(min(slopes)))])
        return self.result(context, values.size, values[index], witness, detail)
