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

import logging
from collections import OrderedDict

import numpy as np

from wpc.harness.suites.base import VerificationSuite, pair_witness, worst_of
from wpc.kernel.scalar import eval_h_grid
from wpc.utils.constants import CHAIN_PAIRS, CURVE_T_MAX, IDENTITY_RTOL, PYTHAGOREAN_PAIRS, SUITE_DIMENSIONS, \
    stream_chain, stream_clarkson, stream_hanner, stream_pythagorean, stream_vector_pairs
from wpc.utils.params import Law, OrthogonalityPreconditionError, Params
from wpc.utils.sampling import sample_pairs
from wpc.vectors.inequalities import clarkson_defects, extremal_required_constants, hanner_defects, \
    lwp_chain, wp_defects
from wpc.vectors.lp_vector import LpVector
from wpc.vectors.orthogonality import bj_project, pythagorean_constant, pythagorean_defect

logger = logging.getLogger("wpc.harness")


def _pairs(context, stream, count, dim):
    config = context.config
    return sample_pairs(config.seed, stream, count, dim, config.workers)


class VectorLawSuite(VerificationSuite):
    """The weak parallelogram law with the constant under test, on random pairs in several dimensions."""

    def __init__(self, law):
        self.law = law
        self.name = "vector-{}".format(law.value)

    def applies(self, context):
        return self.law in context.granted()

    def run(self, context):
        config = context.config
        C = context.tested_constant(self.law)
        dims = sorted(set(SUITE_DIMENSIONS) | {config.dim})
        per_dim = OrderedDict()
        worst, witness, tested = None, None, 0
        for dim in dims:
            xs, ys = _pairs(context, stream_vector_pairs, config.samples, dim)
            values, index = worst_of(*wp_defects(xs, ys, config.p, config.r, C, self.law))
            per_dim[str(dim)] = float(values[index])
            tested += values.size
            if worst is None or values[index] < worst:
                worst, witness = float(values[index]), pair_witness(xs[index], ys[index])
        detail = OrderedDict([("constant", C), ("worstByDim", per_dim)])
        return self.result(context, tested, worst, witness, detail)


class HannerSuite(VerificationSuite):
    name = "hanner"

    def applies(self, context):
        return context.config.p <= 2.0

    def run(self, context):
        config = context.config
        fs, gs = _pairs(context, stream_hanner, config.samples, config.dim)
        values, index = worst_of(*hanner_defects(fs, gs, config.p))
        return self.result(context, values.size, values[index], pair_witness(fs[index], gs[index]))


class ClarksonSuite(VerificationSuite):
    name = "clarkson"

    def applies(self, context):
        return True

    def run(self, context):
        config = context.config
        fs, gs = _pairs(context, stream_clarkson, config.samples, config.dim)
        values, index = worst_of(*clarkson_defects(fs, gs, config.p))
        detail = OrderedDict([("form", "p-UWP(1)" if config.p <= 2.0 else "p-LWP(1)")])
        return self.result(context, values.size, values[index], pair_witness(fs[index], gs[index]), detail)


class PythagoreanSuite(VerificationSuite):
    """
    Builds Birkhoff-James orthogonal pairs with bj_project and checks the Pythagorean inequality of every
    granted law with K = C/(2^{r-1} - 1).
    """
    name = "pythagorean"

    def applies(self, context):
        return bool(context.granted())

    def run(self, context):
        config = context.config
        count = min(config.samples, PYTHAGOREAN_PAIRS)
        xs, zs = _pairs(context, stream_pythagorean, count, config.dim)
        worst, witness, tested = None, None, 0
        detail = OrderedDict()
        for law in context.granted():
            K = pythagorean_constant(context.tested_constant(law), config.r)
            detail[law.value] = OrderedDict([("K", K)])
            for x_coords, z_coords in zip(xs, zs):
                x = LpVector(config.p, x_coords)
                if x.is_zero():
                    continue
                y = bj_project(x, LpVector(config.p, z_coords))
                try:
                    defect = pythagorean_defect(x, y, config.r, K, law)
                    scale = max((x + y).norm() ** config.r, x.norm() ** config.r + K * y.norm() ** config.r)
                    value = defect / scale if scale > 0.0 else 0.0
                except OrthogonalityPreconditionError as error:
                    logger.warning("bj_project produced a non-orthogonal pair, violation %r", error.violation)
                    value = -error.violation / x.norm()
                tested += 1
                if worst is None or value < worst:
                    worst, witness = value, pair_witness(x.coords, y.coords)
        return self.result(context, tested, worst, witness, detail)


class LwpChainSuite(VerificationSuite):
    """Every link of the chain from |f+g|^r + C|f-g|^r to 2^{r-1}(|f|^r + |g|^r) on random pairs."""
    name = "lwp-chain"

    def applies(self, context):
        return Params(context.config.p, context.config.r).in_minimized_range()

    def run(self, context):
        config = context.config
        C = context.tested_constant(Law.LWP)
        count = min(config.samples, CHAIN_PAIRS)
        fs, gs = _pairs(context, stream_chain, count, config.dim)
        per_step = OrderedDict()
        worst, witness = None, None
        for f_coords, g_coords in zip(fs, gs):
            steps = lwp_chain(LpVector(config.p, f_coords), LpVector(config.p, g_coords), config.r, C)
            for step in steps:
                scale = max(abs(step.lhs), abs(step.rhs))
                gap = -abs(step.rhs - step.lhs) if step.relation == "=" else step.rhs - step.lhs
                value = gap / scale if scale > 0.0 else 0.0
                per_step[step.name] = min(per_step.get(step.name, value), value)
                if worst is None or value < worst:
                    witness = pair_witness(f_coords, g_coords)
                    witness["step"] = step.name
                    worst = value
        detail = OrderedDict([("constant", C), ("worstByStep", per_step)])
        return self.result(context, count, worst, witness, detail)


class ExtremalLawSuite(VerificationSuite):
    """The constant required by the extremal pair a = t e0 + e1, b = e0 + t e1 equals h(t) on [0, 0.999]."""
    name = "extremal-law"

    def applies(self, context):
        return Params(context.config.p, context.config.r).in_minimized_range()

    def run(self, context):
        config = context.config
        ts = np.linspace(0.0, CURVE_T_MAX, 1000)
        required = extremal_required_constants(config.p, config.r, ts)
        h = eval_h_grid(Params(config.p, config.r), ts)
        relative = np.abs(required - h) / np.abs(h)
        index = int(np.argmax(relative))
        detail = OrderedDict([("maxRelativeDifference", float(relative[index]))])
        return self.result(context, ts.size, -relative[index], OrderedDict([("t", float(ts[index]))]), detail,
                           passed=relative[index] <= IDENTITY_RTOL)
