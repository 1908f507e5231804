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

import io
import json
import unittest
from contextlib import redirect_stderr, redirect_stdout

from wpc.harness.cli import main


def run_cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class TestCli(unittest.TestCase):
    def test_constant(self):
        code, out, _ = run_cli("constant", "--p", "1.5", "--r", "2.5", "--json")
        self.assertEqual(code, 0)
        result = json.loads(out)
        self.assertAlmostEqual(result["value"], 0.777545, delta=1e-5)
        self.assertAlmostEqual(result["argminT"], 0.027307, delta=5e-4)
        self.assertEqual(result["method"], "GridGoldenNewton")

    def test_constant_dual_paper(self):
        code, out, _ = run_cli("constant", "--p", "2.5", "--r", "1.75", "--law", "uwp", "--convention", "paper",
                               "--json")
        self.assertEqual(code, 0)
        self.assertAlmostEqual(json.loads(out)["value"], 1.15549, delta=1e-4)

    def test_constant_text(self):
        code, out, _ = run_cli("constant", "--p", "1.75", "--r", "2.2")
        self.assertEqual(code, 0)
        self.assertIn("GridGoldenNewton", out)
        self.assertTrue(out.startswith("p "))

    def test_classify(self):
        code, out, _ = run_cli("classify", "--p", "3", "--r", "2.5")
        self.assertEqual(code, 0)
        self.assertEqual(out.splitlines(), ["lwp  none", "uwp  none"])

    def test_bounds(self):
        code, out, _ = run_cli("bounds", "--p", "1.75", "--r", "2.2", "--json")
        self.assertEqual(code, 0)
        self.assertAlmostEqual(json.loads(out)["upper"], 0.922331, delta=1e-6)

    def test_curve(self):
        code, out, _ = run_cli("curve", "--p", "1.5", "--r", "2.5", "--points", "5")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "t,h")
        self.assertEqual(len(lines), 6)
        self.assertTrue(lines[1].startswith("0.0,"))

    def test_curve_minimum_location(self):
        code, out, _ = run_cli("curve", "--p", "1.5", "--r", "2.5", "--points", "500")
        self.assertEqual(code, 0)
        rows = [tuple(float(value) for value in line.split(",")) for line in out.splitlines()[1:]]
        t_min = min(rows, key=lambda row: row[1])[0]
        self.assertTrue(0.02 <= t_min <= 0.03, t_min)

    def test_table(self):
        code, out, _ = run_cli("table", "--p", "1.5", "--r-min", "2", "--r-max", "3", "--steps", "3")
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "r,constant,argminT,lower,upper")
        self.assertTrue(lines[1].startswith("2.0,0.5,"))
        self.assertEqual(len(lines), 4)

    def test_verify_deterministic(self):
        argv = ["verify", "--p", "2", "--r", "2", "--dim", "2", "--samples", "100", "--seed", "1", "--json"]
        code, first, _ = run_cli(*argv)
        self.assertEqual(code, 0)
        _, second, _ = run_cli(*(argv + ["--workers", "3"]))
        self.assertEqual(first, second)
        self.assertTrue(json.loads(first)["passed"])

    def test_verify_violation(self):
        code, _, _ = run_cli("verify", "--p", "1.5", "--r", "2.5", "--dim", "2", "--samples", "50", "--seed", "1",
                             "--constant", "0.79")
        self.assertEqual(code, 2)

    def test_derived(self):
        code, out, _ = run_cli("derived", "--p", "2", "--dim", "2", "--samples", "200", "--seed", "3", "--json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["njUpperBound"], 1.0)

    def test_usage_errors(self):
        for argv in [("constant", "--p", "0.5", "--r", "2"),
                     ("constant", "--p", "1.5", "--r", "2.5", "--law", "uwp"),
                     ("verify", "--p", "3", "--r", "2.5", "--dim", "2", "--samples", "10", "--seed", "1"),
                     ("curve", "--p", "1.5", "--r", "2.5", "--points", "1"),
                     ("derived", "--p", "2", "--dim", "1", "--samples", "10", "--seed", "1")]:
            code, _, err = run_cli(*argv)
            self.assertEqual(code, 64, argv)
            self.assertIn("wpc: error:", err)

    def test_parse_errors_exit_with_usage(self):
        for argv in [("constant", "--p", "1.5"), ("nonsense",), ("verify", "--p", "x", "--r", "2")]:
            with self.assertRaises(SystemExit) as context:
                run_cli(*argv)
            self.assertEqual(context.exception.code, 64)


if __name__ == "__main__":
    unittest.main()
