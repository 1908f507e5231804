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

from wpc.harness.suites.derived import DerivedConstantsSuite
from wpc.harness.suites.optimality import DualAdjudicationSuite, OptimalityWitnessSuite
from wpc.harness.suites.scalar import HPositivitySuite, KNonnegativeSuite, MonotoneRSuite
from wpc.harness.suites.vectors import ClarksonSuite, ExtremalLawSuite, HannerSuite, LwpChainSuite, \
    PythagoreanSuite, VectorLawSuite
from wpc.utils.params import Law


def default_suites():
    """The verification suites in the order a run executes them."""
    return [
        HPositivitySuite(),
        KNonnegativeSuite(),
        MonotoneRSuite(),
        VectorLawSuite(Law.LWP),
        VectorLawSuite(Law.UWP),
        HannerSuite(),
        ClarksonSuite(),
        PythagoreanSuite(),
        LwpChainSuite(),
        ExtremalLawSuite(),
        OptimalityWitnessSuite(),
        DualAdjudicationSuite(),
        DerivedConstantsSuite(),
    ]
