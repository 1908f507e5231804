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
"""
Vector level inequalities in finite dimensional l^p.

Every defect is arranged so that a nonnegative value means the inequality holds. The batch helpers take
numpy arrays of shape (n, dim) and return (defects, scales); the LpVector functions wrap them for a single
pair.
"""

import logging
from typing import NamedTuple

import numpy as np

from wpc.kernel.search import scan_grid
from wpc.utils.constants import EXTREMAL_GRID_POINTS
from wpc.utils.params import DomainError, Law, Params, UnsupportedDomain, ensure_constant, ensure_exponent
from wpc.vectors.lp_vector import LpVector, row_norms

logger = logging.getLogger("wpc.vectors")

EXTREMAL_T_MAX = 1.0 - 1e-5


def _law(kind):
    return Law(kind)


def normalized(defects, scales):
    """normalized divides each defect by its scale. Pairs with a zero scale have a zero defect."""
    defects = np.asarray(defects, dtype=np.float64)
    scales = np.asarray(scales, dtype=np.float64)
    safe = np.where(scales > 0.0, scales, 1.0)
    return np.where(scales > 0.0, defects / safe, 0.0)


def wp_defects(xs, ys, p, r, C, kind):
    """
    wp_defects evaluates the weak parallelogram defect for every row pair.
    :param xs: numpy array (n, dim)
    :param ys: numpy array (n, dim)
    :param p: Norm exponent
    :param r: Law exponent
    :param C: The law constant under test
    :param kind: Law.LWP or Law.UWP
    :return: (defects, scales) where scale = 2^{r-1}(|x|^r + |y|^r)
    """
    kind = _law(kind)
    C = ensure_constant(C)
    scales = 2.0 ** (r - 1.0) * (row_norms(xs, p) ** r + row_norms(ys, p) ** r)
    lhs = row_norms(xs + ys, p) ** r + C * row_norms(xs - ys, p) ** r
    if kind is Law.LWP:
        return scales - lhs, scales
    return lhs - scales, scales


def hanner_defects(fs, gs, p):
    """
    hanner_defects evaluates |F+G|^p + |F-G|^p - (|F|+|G|)^p - ||F|-|G||^p, scaled by (|F|+|G|)^p.
    :raises UnsupportedDomain: for p > 2
    """
    if p > 2.0:
        raise UnsupportedDomain("Hanner's inequality is only used for 1 < p <= 2, received p={}".format(p))
    norm_f = row_norms(fs, p)
    norm_g = row_norms(gs, p)
    scales = (norm_f + norm_g) ** p
    defects = (row_norms(fs + gs, p) ** p + row_norms(fs - gs, p) ** p
               - scales - np.abs(norm_f - norm_g) ** p)
    return defects, scales


def clarkson_defects(fs, gs, p):
    """
    clarkson_defects evaluates Clarkson's p-UWP(1) inequality for p <= 2 and its p-LWP(1) counterpart for
    p >= 2, both oriented to be nonnegative. The scale is 2^{p-1}(|f|^p + |g|^p).
    """
    scales = 2.0 ** (p - 1.0) * (row_norms(fs, p) ** p + row_norms(gs, p) ** p)
    sums = row_norms(fs + gs, p) ** p + row_norms(fs - gs, p) ** p
    if p <= 2.0:
        return sums - scales, scales
    return scales - sums, scales


def wp_defect(x, y, r, C, kind):
    """
    wp_defect evaluates the weak parallelogram law |x+y|^r + C|x-y|^r <= 2^{r-1}(|x|^r + |y|^r) (LWP) or
    its reverse (UWP) on one pair, as RHS - LHS or LHS - RHS respectively.
    :param x: LpVector
    :param y: LpVector of the same exponent and dimension
    :param r: Law exponent
    :param C: The law constant
    :param kind: Law.LWP or Law.UWP
    :return: The defect, homogeneous of degree r
    :raises IncompatibleVectors: when x and y do not match
    """
    x.ensure_compatible(y)
    r = ensure_exponent("r", r)
    defects, _ = wp_defects(x.coords[None, :], y.coords[None, :], x.exponent, r, C, kind)
    return float(defects[0])


def hanner_defect(F, G):
    F.ensure_compatible(G)
    defects, _ = hanner_defects(F.coords[None, :], G.coords[None, :], F.exponent)
    return float(defects[0])


def clarkson_defect(f, g):
    f.ensure_compatible(g)
    defects, _ = clarkson_defects(f.coords[None, :], g.coords[None, :], f.exponent)
    return float(defects[0])


def antipodal_defect(x, r, C, kind):
    """
    antipodal_defect is wp_defect at y = -x, which equals 2^r |x|^r (1 - C) for LWP and 2^r |x|^r (C - 1)
    for UWP. It is negative for any LWP constant above 1 or UWP constant below 1.
    """
    return wp_defect(x, -x, r, C, kind)


def power_mean_gap(x, y, r):
    """
    power_mean_gap returns 2^{r-1}(|x|^r + |y|^r) - 2^{r-r/p}(|x|^p + |y|^p)^{r/p}, nonnegative for r >= p.
    In dimension one it is exactly wp_defect minus two_point_defect.
    """
    x.ensure_compatible(y)
    r = ensure_exponent("r", r)
    p = x.exponent
    nx, ny = x.norm(), y.norm()
    return 2.0 ** (r - 1.0) * (nx ** r + ny ** r) - 2.0 ** (r - r / p) * (nx ** p + ny ** p) ** (r / p)


def extremal_pair(t, p, dim=2):
    """
    extremal_pair builds a = t e0 + e1 and b = e0 + t e1 in l^p of the given dimension.
    :param t: Family parameter in [0, 1)
    :param p: Norm exponent
    :param dim: Dimension, at least 2
    :return: (a, b) as LpVectors
    """
    t = float(t)
    if not (0.0 <= t < 1.0):
        raise DomainError("t must lie in [0, 1), received {}".format(t))
    if dim < 2:
        raise DomainError("the extremal pair needs dim >= 2, received {}".format(dim))
    a = np.zeros(dim)
    b = np.zeros(dim)
    a[0], a[1] = t, 1.0
    b[0], b[1] = 1.0, t
    return LpVector(p, a), LpVector(p, b)


def _log_norm(coords, p):
    # log of the l^p norm of each row, in long double
    magnitudes = np.abs(coords)
    with np.errstate(divide="ignore"):
        return np.log(np.sum(magnitudes ** p, axis=-1)) / p


def _log_norm_ratio(top, bottom, p):
    # log(|top| / |bottom|) row by row. Each |top_i|^p - |bottom_i|^p is formed from the coordinate
    # difference through log1p and expm1, so rows of nearly equal norm keep their relative accuracy.
    top = np.abs(top)
    bottom = np.abs(bottom)
    safe = np.where(bottom > 0, bottom, 1)
    with np.errstate(divide="ignore"):
        steps = bottom ** p * np.expm1(p * np.log1p((top - bottom) / safe))
    steps = np.where(bottom > 0, steps, top ** p)
    return np.log1p(np.sum(steps, axis=-1) / np.sum(bottom ** p, axis=-1)) / p


def extremal_required_constants(p, r, ts):
    """
    extremal_required_constants is the vectorised form of extremal_required_constant. The norms of the
    extremal pairs are taken in long double, and 2|a| is compared with |a + b| coordinate by coordinate so
    the vanishing difference near t = 1 is not lost to rounding.
    """
    params = Params(p, r)
    ts = np.asarray(ts, dtype=np.float64)
    if ts.size and (ts.min() < 0.0 or ts.max() >= 1.0):
        raise DomainError("every t must lie in [0, 1)")
    t = ts.astype(np.longdouble)[:, None]
    p_ld = np.longdouble(params.p)
    r_ld = np.longdouble(params.r)
    one = np.ones_like(t)
    a = np.concatenate([t, one], axis=1)
    b = np.concatenate([one, t], axis=1)
    log_sum = _log_norm(a + b, p_ld)
    log_diff = _log_norm(a - b, p_ld)
    # 2^{r-1}(|a|^r + |b|^r) with |a| = |b| is |2a|^r
    log_ratio = r_ld * _log_norm_ratio(2 * a, a + b, p_ld)
    numerator = np.exp(r_ld * log_sum) * np.expm1(log_ratio)
    return (numerator / np.exp(r_ld * log_diff)).astype(np.float64)


def extremal_required_constant(p, r, t, kind=Law.LWP):
    """
    extremal_required_constant is the constant C at which wp_defect vanishes on extremal_pair(t). It
    equals h(t). Over t its infimum caps every admissible LWP constant and its supremum is a floor for
    every admissible UWP constant.
    :param p: Norm exponent
    :param r: Law exponent
    :param t: Family parameter in [0, 1)
    :param kind: Law.LWP or Law.UWP, the value is the same for both
    :return: The required constant
    """
    _law(kind)
    t = float(t)
    if not (0.0 <= t < 1.0):
        raise DomainError("t must lie in [0, 1), received {}".format(t))
    return float(extremal_required_constants(p, r, [t])[0])


def extremal_supremum(p, r, points=EXTREMAL_GRID_POINTS, t_max=EXTREMAL_T_MAX):
    """
    extremal_supremum scans the extremal family for the largest required constant.
    :return: (supremum, t at the supremum)
    """
    ts = scan_grid(points, t_max)
    values = extremal_required_constants(p, r, ts)
    index = int(np.argmax(values))
    logger.debug("extremal supremum %r at t=%r for p=%r r=%r", values[index], ts[index], p, r)
    return float(values[index]), float(ts[index])


def extremal_infimum(p, r, points=EXTREMAL_GRID_POINTS, t_max=EXTREMAL_T_MAX):
    """extremal_infimum scans the extremal family for the smallest required constant."""
    ts = scan_grid(points, t_max)
    values = extremal_required_constants(p, r, ts)
    index = int(np.argmin(values))
    return float(values[index]), float(ts[index])


class ChainStep(NamedTuple):
    name: str
    lhs: float
    rhs: float
    relation: str

    def holds(self, slack):
        scale = max(abs(self.lhs), abs(self.rhs))
        if self.relation == "=":
            return abs(self.lhs - self.rhs) <= slack * scale
        return self.lhs <= self.rhs + slack * scale


def lwp_chain(f, g, r, C):
    """
    lwp_chain evaluates each link of the argument that l^p is r-LWP(C) for 1 < p <= 2 <= r <= q:

    - substitution: |f+g|^r + C|f-g|^r = (u+v)^r + C(u-v)^r with 2u = |f+g| + |f-g|, 2v = |f+g| - |f-g|
    - two-point: (u+v)^r + C(u-v)^r <= 2^{r-r/p}(|u|^p + |v|^p)^{r/p}
    - hanner: Hanner's inequality with F = (f+g)/2, G = (f-g)/2 turns the right side into
      2^{r-r/p}(|f|^p + |g|^p)^{r/p}
    - power-mean: which is at most 2^{r-1}(|f|^r + |g|^r)

    :param f: LpVector
    :param g: LpVector
    :param r: Law exponent
    :param C: The constant, at most C_{p,r} for the two-point link to hold
    :return: list of ChainStep
    :raises DomainError: outside 1 < p <= 2 <= r <= q
    """
    f.ensure_compatible(g)
    params = Params(f.exponent, r)
    if not params.in_minimized_range():
        raise DomainError("the chain needs 1 < p <= 2 <= r <= q, received p={} r={}".format(params.p, params.r))
    C = ensure_constant(C)
    p, r = params.p, params.r
    plus = (f + g).norm()
    minus = (f - g).norm()
    u = 0.5 * (plus + minus)
    v = 0.5 * (plus - minus)
    coefficient = 2.0 ** (r - r / p)

    start = plus ** r + C * minus ** r
    substituted = (u + v) ** r + C * (u - v) ** r
    two_point = coefficient * (abs(u) ** p + abs(v) ** p) ** (r / p)
    hanner = coefficient * (f.norm() ** p + g.norm() ** p) ** (r / p)
    power_mean = 2.0 ** (r - 1.0) * (f.norm() ** r + g.norm() ** r)
    return [
        ChainStep("substitution", start, substituted, "="),
        ChainStep("two-point", substituted, two_point, "<="),
        ChainStep("hanner", two_point, hanner, "<="),
        ChainStep("power-mean", hanner, power_mean, "<="),
    ]
