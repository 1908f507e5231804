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

import csv
import json
from enum import Enum
from json import JSONEncoder

import numpy as np

from wpc.utils.params import Params


class ReportEncoder(JSONEncoder):
    def default(self, to_encode):
        if isinstance(to_encode, Enum):
            return to_encode.value
        elif isinstance(to_encode, np.bool_):
            return bool(to_encode)
        elif isinstance(to_encode, np.integer):
            return int(to_encode)
        elif isinstance(to_encode, np.floating):
            return float(to_encode)
        elif isinstance(to_encode, np.ndarray):
            return to_encode.tolist()
        elif isinstance(to_encode, Params):
            return {"p": to_encode.p, "r": to_encode.r}
        elif hasattr(to_encode, "to_dict"):
            return to_encode.to_dict()
        elif hasattr(to_encode, "to_list"):
            return to_encode.to_list()
        return JSONEncoder.default(self, to_encode)


def dump_report(report, compact=False):
    """
    dump_report serialises a report to JSON. Floats are written with repr, the shortest text that reads
    back to the same double, so parsing and dumping again is byte-identical.
    :param report: OrderedDict or any object ReportEncoder understands
    :param compact: Drop indentation and whitespace
    :return: The JSON text
    """
    if compact:
        return json.dumps(report, cls=ReportEncoder, separators=(",", ":"))
    return json.dumps(report, cls=ReportEncoder, indent=2)


def format_number(value):
    return repr(float(value))


def write_csv(stream, header, rows):
    """write_csv writes a header and rows of numbers, each number through format_number."""
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_number(value) if isinstance(value, (float, np.floating)) else value
                         for value in row])
