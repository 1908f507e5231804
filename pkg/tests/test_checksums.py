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

import unittest
from collections import OrderedDict

from wpc.utils.checksums import get_crc32_calculator, report_fingerprint


class TestChecksums(unittest.TestCase):
    crc_32 = get_crc32_calculator()

    test_data = bytes([x for x in range(16)])

    def test_crc32_check_value(self):
        res = self.crc_32.checksum(b"123456789")
        self.assertEqual(res, 0xCBF43926)

    def test_crc32(self):
        res = self.crc_32.checksum(self.test_data)
        self.assertEqual(res, 3469664904)

    def test_fingerprint_ignores_itself(self):
        report = OrderedDict([("config", OrderedDict([("p", 1.5), ("r", 2.5)])), ("passed", True)])
        fingerprint = report_fingerprint(report)
        report["fingerprint"] = fingerprint
        self.assertEqual(report_fingerprint(report), fingerprint)

    def test_fingerprint_tracks_content(self):
        first = OrderedDict([("value", 0.777545), ("passed", True)])
        second = OrderedDict([("value", 0.777546), ("passed", True)])
        self.assertNotEqual(report_fingerprint(first), report_fingerprint(second))


if __name__ == "__main__":
    unittest.main()
