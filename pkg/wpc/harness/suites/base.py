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
from dataclasses import dataclass, field

import numpy as np

from wpc.solver.classify import classify
from wpc.solver.optimal import optimal_constant
from wpc.utils.constants import report_suite_detail, report_suite_name, report_suite_pairs_tested, \
    report_suite_passed, report_suite_worst_defect, report_suite_worst_witness
from wpc.vectors.inequalities import normalized


@dataclass
class SuiteResult:
    name: str
    pairs_tested: int
    worst_defect: float
    worst_witness: object
    passed: bool
    detail: dict = field(default_factory=OrderedDict)

    def to_dict(self):
        result = OrderedDict()
        result[report_suite_name] = self.name
        result[report_suite_pairs_tested] = self.pairs_tested
        result[report_suite_worst_defect] = self.worst_defect
        result[report_suite_worst_witness] = self.worst_witness
        result[report_suite_passed] = self.passed
        result[report_suite_detail] = self.detail
        return result


class SuiteContext:
    """
    SuiteContext holds what every suite of one run shares: the configuration, the classification of (p, r)
    and the law constants, each computed once.
    """

    def __init__(self, config):
        self.config = config
        self.classification = classify(config.p, config.r)
        self.adjudication = None
        self._constants = {}

    def optimal(self, law):
        if law not in self._constants:
            self._constants[law] = optimal_constant(self.config.p, self.config.r, law, self.config.convention)
        return self._constants[law]

    def tested_constant(self, law):
        """The constant under test: the configured override, or the optimal constant."""
        if self.config.constant is not None:
            return self.config.constant
        return self.optimal(law).value

    def granted(self):
        return self.classification.granted()


def pair_witness(x, y):
    witness = OrderedDict()
    witness["x"] = [float(value) for value in x]
    witness["y"] = [float(value) for value in y]
    return witness


def worst_of(defects, scales):
    """worst_of normalises defects and returns them with the index of the smallest."""
    values = normalized(defects, scales)
    if values.size == 0:
        return values, None
    return values, int(np.argmin(values))


class VerificationSuite:
    name = None

    def applies(self, context):
        raise NotImplementedError("applies has not been implemented")

    def run(self, context):
        raise NotImplementedError("run has not been implemented")

    def result(self, context, tested, worst, witness, detail=None, passed=None):
        """
        result builds the SuiteResult. Unless the suite decides otherwise a suite passes when its worst
        normalised defect is at least -slack.
        """
        worst = 0.0 if worst is None else float(worst)
        if passed is None:
            passed = worst >= -context.config.slack
        return SuiteResult(self.name, int(tested), worst, witness, bool(passed),
                           detail if detail is not None else OrderedDict())
