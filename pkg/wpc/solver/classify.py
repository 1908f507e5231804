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
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from wpc.utils.params import DualConvention, Law, LawNotGranted, Params


class ConstantForm(Enum):
    UNIT = "unit"
    MINIMIZED_H = "minimized_h"
    DUAL_POWER = "dual_power"


class Region(Enum):
    SMALL_P_UWP_UNIT = "1<p<=2, 1<r<=p: r-UWP(1)"
    SMALL_P_LWP_MINIMIZED = "1<p<=2, 2<=r<=q: r-LWP(C_{p,r})"
    SMALL_P_LWP_UNIT = "1<p<=2, q<=r: r-LWP(1)"
    LARGE_P_LWP_UNIT = "p>=2, p<=r: r-LWP(1)"
    LARGE_P_UWP_DUAL = "p>=2, q<=r<=2: r-UWP(C_{q,r'}^-e)"
    LARGE_P_UWP_UNIT = "p>=2, 1<r<=q: r-UWP(1)"


@dataclass(frozen=True)
class LawEntry:
    form: ConstantForm
    regions: Tuple[Region, ...]
    base: Optional[Params] = None
    convention: Optional[DualConvention] = None

    def to_dict(self):
        result = OrderedDict()
        result["constantForm"] = self.form
        result["regions"] = [region.name for region in self.regions]
        if self.base is not None:
            result["base"] = OrderedDict([("p", self.base.p), ("r", self.base.r)])
            result["convention"] = self.convention
        return result


@dataclass(frozen=True)
class LawClassification:
    params: Params
    lwp: Optional[LawEntry]
    uwp: Optional[LawEntry]

    def entry(self, law):
        entry = self.lwp if law is Law.LWP else self.uwp
        if entry is None:
            raise LawNotGranted("L^{} satisfies no {}-{} law".format(
                self.params.p, self.params.r, law.value.upper()))
        return entry

    def granted(self):
        return [law for law in Law if (self.lwp if law is Law.LWP else self.uwp) is not None]

    def to_dict(self):
        result = OrderedDict()
        result["p"] = self.params.p
        result["r"] = self.params.r
        result["q"] = self.params.q
        result["rPrime"] = self.params.r_prime
        result["lwp"] = self.lwp.to_dict() if self.lwp else None
        result["uwp"] = self.uwp.to_dict() if self.uwp else None
        return result


def _merge(candidates, base=None):
    """
    _merge folds the regions granting one law into a single entry. Regions meet only on their boundaries,
    where the constants agree, so the exact unit constant wins over a computed one.
    """
    if not candidates:
        return None
    forms = [form for form, _ in candidates]
    regions = tuple(region for _, region in candidates)
    if ConstantForm.UNIT in forms:
        return LawEntry(ConstantForm.UNIT, regions)
    form = forms[0]
    if form is ConstantForm.DUAL_POWER:
        return LawEntry(form, regions, base=base, convention=DualConvention.PAPER)
    return LawEntry(form, regions)


def classify(p, r):
    """
    classify decides which weak parallelogram laws L^p satisfies with exponent r, and how each optimal
    constant is obtained. Boundary membership uses exact comparisons on the supplied values.
    :param p: Lebesgue exponent, 1 < p < inf
    :param r: Law exponent, 1 < r < inf
    :return: LawClassification
    """
    params = Params(p, r)
    p, r, q = params.p, params.r, params.q
    lwp = []
    uwp = []

    if p <= 2.0:
        if r <= p:
            uwp.append((ConstantForm.UNIT, Region.SMALL_P_UWP_UNIT))
        if 2.0 <= r <= q:
            lwp.append((ConstantForm.MINIMIZED_H, Region.SMALL_P_LWP_MINIMIZED))
        if r >= q:
            lwp.append((ConstantForm.UNIT, Region.SMALL_P_LWP_UNIT))
    if p >= 2.0:
        if r >= p:
            lwp.append((ConstantForm.UNIT, Region.LARGE_P_LWP_UNIT))
        if q <= r <= 2.0:
            uwp.append((ConstantForm.DUAL_POWER, Region.LARGE_P_UWP_DUAL))
        if r <= q:
            uwp.append((ConstantForm.UNIT, Region.LARGE_P_UWP_UNIT))

    return LawClassification(params, _merge(lwp), _merge(uwp, base=params.dual()))
