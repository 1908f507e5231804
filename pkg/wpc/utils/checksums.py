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

from crc import Calculator, Configuration

from wpc.utils.constants import report_fingerprint as fingerprint_key
from wpc.utils.helpers import dump_report

CRC32_POLYNOMIAL = 0x04C11DB7


def get_crc32_calculator():
    """
    get_crc32_calculator creates the standard reflected CRC-32 calculator (the zlib/PNG parameters).
    :return: The CRC calculator
    """
    config = Configuration(
        width=32,
        polynomial=CRC32_POLYNOMIAL,
        init_value=0xFFFFFFFF,
        final_xor_value=0xFFFFFFFF,
        reverse_input=True,
        reverse_output=True,
    )
    return Calculator(config)


def report_fingerprint(report):
    """
    report_fingerprint computes the CRC-32 of the compact JSON form of a report, leaving out any
    fingerprint already present.
    :param report: A verification report as an OrderedDict
    :return: The checksum as an int
    """
    body = OrderedDict((key, value) for key, value in report.items() if key != fingerprint_key)
    return get_crc32_calculator().checksum(dump_report(body, compact=True).encode("utf-8"))
