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

import argparse
import logging
import sys

import numpy as np

from wpc.derived.nj_james import derived_constants
from wpc.harness.runner import SuiteConfig, exit_code, run_suite
from wpc.kernel.scalar import eval_h_grid
from wpc.solver.classify import classify
from wpc.solver.optimal import constant_bounds, minimize_h, optimal_constant
from wpc.utils.constants import CURVE_T_MAX, DEFAULT_SLACK, EXIT_NON_CONVERGENCE, EXIT_OK, EXIT_USAGE, \
    EXIT_VIOLATION, T_TOL, report_passed, report_suite_name, report_suite_passed, report_suite_worst_defect, report_suites
from wpc.utils.helpers import dump_report, format_number, write_csv
from wpc.utils.params import DualConvention, Law, NonConvergence, Params, UsageError, WPCError
from wpc.utils.sampling import MAX_SEED

logger = logging.getLogger("wpc.cli")


class UsageErrorParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "{}: error: {}\n".format(self.prog, message))


def _emit_mapping(mapping, as_json):
    if as_json:
        print(dump_report(mapping))
        return
    width = max(len(str(key)) for key in mapping)
    for key, value in mapping.items():
        if isinstance(value, float):
            value = format_number(value)
        elif hasattr(value, "value"):
            value = value.value
        print("{}  {}".format(str(key).ljust(width), value))


def command_constant(args):
    result = optimal_constant(args.p, args.r, Law(args.law), DualConvention(args.convention), args.tol)
    _emit_mapping(result.to_dict(), args.json)
    return EXIT_OK


def command_classify(args):
    classification = classify(args.p, args.r)
    if args.json:
        print(dump_report(classification.to_dict()))
        return EXIT_OK
    for law in Law:
        entry = classification.lwp if law is Law.LWP else classification.uwp
        if entry is None:
            print("{}  none".format(law.value))
            continue
        line = "{}  {}  {}".format(law.value, entry.form.value, ", ".join(region.value for region in entry.regions))
        if entry.base is not None:
            line += "  base p={} r={}".format(format_number(entry.base.p), format_number(entry.base.r))
        print(line)
    return EXIT_OK


def command_bounds(args):
    lower, upper = constant_bounds(args.p, args.r)
    _emit_mapping({"lower": lower, "upper": upper}, args.json)
    return EXIT_OK


def command_curve(args):
    if args.points < 2:
        raise UsageError("points must be at least 2, received {}".format(args.points))
    if not (0.0 < args.t_max < 1.0):
        raise UsageError("t-max must lie in (0, 1), received {}".format(args.t_max))
    ts = np.linspace(0.0, args.t_max, args.points)
    values = eval_h_grid(Params(args.p, args.r), ts)
    write_csv(sys.stdout, ["t", "h"], zip(ts, values))
    return EXIT_OK


def command_table(args):
    if args.steps < 1:
        raise UsageError("steps must be at least 1, received {}".format(args.steps))
    rows = []
    for r in np.linspace(args.r_min, args.r_max, args.steps):
        result = minimize_h(args.p, float(r))
        rows.append((float(r), result.value, result.argmin_t, result.lower_bound, result.upper_bound))
    write_csv(sys.stdout, ["r", "constant", "argminT", "lower", "upper"], rows)
    return EXIT_OK


def command_verify(args):
    config = SuiteConfig(args.p, args.r, args.dim, args.samples, args.seed, slack=args.slack,
                         constant=args.constant, workers=args.workers,
                         convention=DualConvention(args.convention))
    report = run_suite(config)
    if args.json:
        print(dump_report(report))
    else:
        for suite in report[report_suites]:
            print("{:<22} {:<7} worst {}".format(suite[report_suite_name],
                                                 "passed" if suite[report_suite_passed] else "FAILED",
                                                 format_number(suite[report_suite_worst_defect])))
        print("passed" if report[report_passed] else "FAILED")
    return exit_code(report)


def command_derived(args):
    if args.dim < 2 or args.samples < 1 or not (0 <= args.seed <= MAX_SEED) or args.workers < 1:
        raise UsageError("derived needs dim >= 2, samples >= 1, workers >= 1 and a 64-bit unsigned seed")
    report = derived_constants(args.p, args.dim, args.samples, args.seed, args.workers)
    if args.json:
        print(dump_report(report))
    else:
        _emit_mapping({key: value for key, value in report.to_dict().items() if not isinstance(value, list)},
                      False)
    return EXIT_OK if report.consistent() else EXIT_VIOLATION


def _add_pair(parser, with_r=True):
    parser.add_argument("--p", type=float, required=True, help="Lebesgue exponent")
    if with_r:
        parser.add_argument("--r", type=float, required=True, help="Law exponent")


def _add_sampling(parser):
    parser.add_argument("--dim", type=int, required=True, help="Dimension of the sampled vectors")
    parser.add_argument("--samples", type=int, required=True, help="Number of sampled pairs")
    parser.add_argument("--seed", type=int, required=True, help="64-bit unsigned seed")
    parser.add_argument("--workers", type=int, default=1, help="Threads used for sampling")
    parser.add_argument("--json", action="store_true", help="Write JSON")


def build_parser():
    parser = UsageErrorParser(prog="wpc", description="Optimal weak parallelogram constants of L^p.")
    parser.add_argument("--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=UsageErrorParser)

    constant = subparsers.add_parser("constant", help="Compute an optimal law constant.")
    _add_pair(constant)
    constant.add_argument("--law", choices=[law.value for law in Law], default=Law.LWP.value)
    constant.add_argument("--convention", choices=[c.value for c in DualConvention],
                          default=DualConvention.PAPER.value)
    constant.add_argument("--tol", type=float, default=T_TOL)
    constant.add_argument("--json", action="store_true")
    constant.set_defaults(func=command_constant)

    classify_parser = subparsers.add_parser("classify", help="Decide which laws hold at (p, r).")
    _add_pair(classify_parser)
    classify_parser.add_argument("--json", action="store_true")
    classify_parser.set_defaults(func=command_classify)

    bounds = subparsers.add_parser("bounds", help="Lower and upper bounds on C_{p,r}.")
    _add_pair(bounds)
    bounds.add_argument("--json", action="store_true")
    bounds.set_defaults(func=command_bounds)

    curve = subparsers.add_parser("curve", help="CSV of h(t) on a uniform grid.")
    _add_pair(curve)
    curve.add_argument("--points", type=int, required=True)
    curve.add_argument("--t-max", type=float, default=CURVE_T_MAX)
    curve.set_defaults(func=command_curve)

    verify = subparsers.add_parser("verify", help="Run the seeded verification suites.")
    _add_pair(verify)
    _add_sampling(verify)
    verify.add_argument("--slack", type=float, default=DEFAULT_SLACK)
    verify.add_argument("--constant", type=float, default=None, help="Law constant to test instead of the optimum")
    verify.add_argument("--convention", choices=[c.value for c in DualConvention],
                        default=DualConvention.PAPER.value)
    verify.set_defaults(func=command_verify)

    derived = subparsers.add_parser("derived", help="von Neumann-Jordan and James constants.")
    _add_pair(derived, with_r=False)
    _add_sampling(derived)
    derived.set_defaults(func=command_derived)

    table = subparsers.add_parser("table", help="CSV of C_{p,r} over a range of r.")
    _add_pair(table, with_r=False)
    table.add_argument("--r-min", type=float, required=True)
    table.add_argument("--r-max", type=float, required=True)
    table.add_argument("--steps", type=int, required=True)
    table.set_defaults(func=command_table)
    return parser


def main(argv=None):
    """
    main runs one subcommand and returns its exit code: 0 on success, 2 when a verification fails, 3 when a
    computation does not converge and 64 for invalid usage.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=getattr(logging, args.log_level), stream=sys.stderr,
                        format="%(asctime)s %(name)s %(levelname)s %(message)s")
    try:
        return args.func(args)
    except NonConvergence as error:
        logger.error("%s: %r", error, error.diagnostics)
        print("wpc: error: {}".format(error), file=sys.stderr)
        return EXIT_NON_CONVERGENCE
    except WPCError as error:
        print("wpc: error: {}".format(error), file=sys.stderr)
        return EXIT_USAGE


def run():
    sys.exit(main())
