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

from wpc.derived.nj_james import derived_constants
from wpc.harness.suites.base import VerificationSuite
from wpc.utils.constants import DERIVED_SLACK


class DerivedConstantsSuite(VerificationSuite):
    """Empirical C_NJ and J against the asserted upper bounds derived from the law constants."""
    name = "derived-constants"

    def applies(self, context):
        return True

    def run(self, context):
        config = context.config
        report = derived_constants(config.p, max(config.dim, 2), config.samples, config.seed, config.workers)
        margins = []
        for estimate, bounds in ((report.nj_estimate, report.nj_bounds),
                                 (report.james_estimate, report.james_upper_bounds)):
            margins += [(bound.bound - estimate, bound) for bound in bounds if bound.asserted]
        worst, tightest = min(margins, key=lambda margin: margin[0])
        witness = OrderedDict([("part", tightest.part), ("r", tightest.r), ("bound", tightest.bound)])
        return self.result(context, 2 * report.samples, worst, witness, report.to_dict(),
                           passed=report.consistent(DERIVED_SLACK))
