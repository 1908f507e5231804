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
import math
from collections import OrderedDict
from dataclasses import dataclass
from typing import Optional

from wpc.harness.suites import default_suites
from wpc.harness.suites.base import SuiteContext
from wpc.solver.classify import classify
from wpc.utils.checksums import report_fingerprint
from wpc.utils.constants import DEFAULT_SLACK, EXIT_OK, EXIT_VIOLATION
from wpc.utils.constants import report_adjudication, report_config, report_config_constant, \
    report_config_convention, report_config_dim, report_config_p, report_config_r, report_config_samples, \
    report_config_seed, report_config_slack, report_fingerprint as fingerprint_key, report_passed, \
    report_suite_passed, report_suites
from wpc.utils.params import DomainError, DualConvention, UsageError, ensure_exponent
from wpc.utils.sampling import MAX_SEED

logger = logging.getLogger("wpc.harness")


@dataclass(frozen=True)
class SuiteConfig:
    """
    SuiteConfig is one verification run. workers only changes how samples are drawn, never what is drawn,
    so it is left out of the report.
    """
    p: float
    r: float
    dim: int
    samples: int
    seed: int
    slack: float = DEFAULT_SLACK
    constant: Optional[float] = None
    workers: int = 1
    convention: DualConvention = DualConvention.PAPER

    def __post_init__(self):
        try:
            object.__setattr__(self, "p", ensure_exponent("p", self.p))
            object.__setattr__(self, "r", ensure_exponent("r", self.r))
        except DomainError as error:
            raise UsageError(str(error)) from error
        for name in ("dim", "samples", "workers"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise UsageError("{} must be a positive integer, received {!r}".format(name, value))
        if isinstance(self.seed, bool) or not isinstance(self.seed, int) or not (0 <= self.seed <= MAX_SEED):
            raise UsageError("seed must be an unsigned 64-bit integer, received {!r}".format(self.seed))
        if not (math.isfinite(self.slack) and self.slack >= 0.0):
            raise UsageError("slack must be finite and nonnegative, received {!r}".format(self.slack))
        if self.constant is not None and not (math.isfinite(self.constant) and self.constant > 0.0):
            raise UsageError("constant must be finite and positive, received {!r}".format(self.constant))
        if not isinstance(self.convention, DualConvention):
            raise UsageError("convention must be a DualConvention, received {!r}".format(self.convention))
        if not classify(self.p, self.r).granted():
            raise UsageError("L^{} satisfies no weak parallelogram law with r={}".format(self.p, self.r))

    def to_dict(self):
        result = OrderedDict()
        result[report_config_p] = self.p
        result[report_config_r] = self.r
        result[report_config_dim] = self.dim
        result[report_config_samples] = self.samples
        result[report_config_seed] = self.seed
        result[report_config_slack] = self.slack
        result[report_config_constant] = self.constant
        result[report_config_convention] = self.convention
        return result


def run_suite(config, suites=None):
    """
    run_suite runs every applicable verification suite, in order, and assembles the report.
    :param config: SuiteConfig
    :param suites: Suites to run, default_suites() when None
    :return: OrderedDict with the config echo, the suite results, the dual adjudication (or None), the
             overall verdict and a CRC-32 fingerprint of the rest
    :raises NonConvergence: when a constant cannot be computed
    """
    context = SuiteContext(config)
    results = []
    for suite in default_suites() if suites is None else suites:
        if not suite.applies(context):
            logger.debug("suite %s does not apply at p=%r r=%r", suite.name, config.p, config.r)
            continue
        result = suite.run(context)
        logger.info("suite %s: %d tested, worst %r, %s", result.name, result.pairs_tested,
                    result.worst_defect, "passed" if result.passed else "FAILED")
        results.append(result.to_dict())

    report = OrderedDict()
    report[report_config] = config.to_dict()
    report[report_suites] = results
    report[report_adjudication] = context.adjudication
    report[report_passed] = all(result[report_suite_passed] for result in results)
    report[fingerprint_key] = report_fingerprint(report)
    return report


def exit_code(report):
    return EXIT_OK if report[report_passed] else EXIT_VIOLATION
