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
from wpc.kernel.search import scan_grid
from wpc.solver.classify import ConstantForm
from wpc.solver.optimal import conjugate_boundary_deviation
from wpc.utils.constants import ADJUDICATION_TOL, EXTREMAL_GRID_POINTS, WITNESS_INFLATION, \
    report_adjudication_duality, report_adjudication_duality_gap, report_adjudication_paper, \
    report_adjudication_paper_gap, report_adjudication_supremum, report_adjudication_verdict, \
    stream_uwp_duality
from wpc.utils.params import DualConvention, Law
from wpc.utils.sampling import sample_pairs
from wpc.vectors.inequalities import EXTREMAL_T_MAX, extremal_supremum, wp_defects

logger = logging.getLogger("wpc.harness")


def extremal_arrays(points=EXTREMAL_GRID_POINTS, t_max=EXTREMAL_T_MAX):
    """The extremal pairs (t, 1), (1, t) over the scan grid, as row arrays."""
    ts = scan_grid(points, t_max)
    ones = np.ones_like(ts)
    return ts, np.column_stack([ts, ones]), np.column_stack([ones, ts])


def antipodal_arrays():
    return np.array([[1.0]]), np.array([[-1.0]])


def sharpened(constant, law):
    """The constant moved just past the optimum: up for a lower law, down for an upper law."""
    if law is Law.LWP:
        return constant * (1.0 + WITNESS_INFLATION)
    return constant / (1.0 + WITNESS_INFLATION)


class OptimalityWitnessSuite(VerificationSuite):
    """
    For every granted law the constant under test must hold on its witness family, and the optimal constant
    moved by a factor 1.001 past the optimum must fail on it. The family is the extremal pair for minimised
    and dual constants and the antipodal pair y = -x for unit constants.
    """
    name = "optimality-witness"

    def applies(self, context):
        return bool(context.granted())

    def run(self, context):
        config = context.config
        worst, witness, tested = None, None, 0
        sharp_everywhere = True
        detail = OrderedDict()
        for law in context.granted():
            entry = context.classification.entry(law)
            optimal = context.optimal(law)
            reference = optimal.value
            if entry.form is ConstantForm.UNIT:
                xs, ys = antipodal_arrays()
                family = "antipodal"
            else:
                _, xs, ys = extremal_arrays()
                family = "extremal"
                if entry.form is ConstantForm.DUAL_POWER:
                    reference = optimal.dual_values[DualConvention.DUALITY.value]
            constant = context.tested_constant(law)
            values, index = worst_of(*wp_defects(xs, ys, config.p, config.r, constant, law))
            moved = sharpened(reference, law)
            sharp_values, sharp_index = worst_of(*wp_defects(xs, ys, config.p, config.r, moved, law))
            sharp = sharp_values[sharp_index] < 0.0
            sharp_everywhere = sharp_everywhere and sharp
            tested += 2 * values.size
            law_detail = OrderedDict()
            law_detail["family"] = family
            law_detail["constant"] = constant
            law_detail["movedConstant"] = moved
            law_detail["movedDefect"] = float(sharp_values[sharp_index])
            law_detail["movedWitness"] = pair_witness(xs[sharp_index], ys[sharp_index])
            law_detail["sharp"] = bool(sharp)
            detail[law.value] = law_detail
            if worst is None or values[index] < worst:
                worst, witness = float(values[index]), pair_witness(xs[index], ys[index])
        if config.p < 2.0:
            # informational, C_{p,q} against the unit constant of the neighbouring region
            detail["conjugateBoundaryDeviation"] = conjugate_boundary_deviation(config.p)
        passed = worst >= -config.slack and sharp_everywhere
        return self.result(context, tested, worst, witness, detail, passed=passed)


def verdict(paper_gap, duality_gap, tol=ADJUDICATION_TOL):
    if paper_gap < -tol or duality_gap < -tol:
        return "inconsistent"
    if abs(duality_gap) <= tol:
        return "duality-sharp"
    if abs(paper_gap) <= tol:
        return "paper-sharp"
    return "neither-sharp"


class DualAdjudicationSuite(VerificationSuite):
    """
    Compares the two dual conventions for the upper law constant with the supremum S of the constants the
    extremal family requires. Both must be at least S - 1e-6, and the upper law with the duality convention
    must hold on random pairs.
    """
    name = "dual-adjudication"

    def applies(self, context):
        if Law.UWP not in context.granted():
            return False
        return context.classification.entry(Law.UWP).form is ConstantForm.DUAL_POWER

    def adjudicate(self, context):
        config = context.config
        values = context.optimal(Law.UWP).dual_values
        paper = values[DualConvention.PAPER.value]
        duality = values[DualConvention.DUALITY.value]
        supremum, at_t = extremal_supremum(config.p, config.r)
        result = OrderedDict()
        result[report_adjudication_paper] = paper
        result[report_adjudication_duality] = duality
        result[report_adjudication_supremum] = supremum
        result[report_adjudication_paper_gap] = paper - supremum
        result[report_adjudication_duality_gap] = duality - supremum
        result[report_adjudication_verdict] = verdict(paper - supremum, duality - supremum)
        logger.info("dual adjudication at p=%r r=%r: S=%r at t=%r, paper %r, duality %r",
                    config.p, config.r, supremum, at_t, paper, duality)
        return result

    def run(self, context):
        config = context.config
        adjudication = self.adjudicate(context)
        context.adjudication = adjudication
        duality = adjudication[report_adjudication_duality]
        xs, ys = sample_pairs(config.seed, stream_uwp_duality, config.samples, config.dim, config.workers)
        values, index = worst_of(*wp_defects(xs, ys, config.p, config.r, duality, Law.UWP))
        conventions_hold = min(adjudication[report_adjudication_paper_gap],
                               adjudication[report_adjudication_duality_gap]) >= -ADJUDICATION_TOL
        passed = values[index] >= -config.slack and conventions_hold
        detail = OrderedDict([("constant", duality), ("conventionsAboveSupremum", conventions_hold)])
        return self.result(context, values.size, values[index], pair_witness(xs[index], ys[index]), detail,
                           passed=passed)
