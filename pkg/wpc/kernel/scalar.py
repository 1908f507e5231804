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
Scalar formulas behind the weak parallelogram constants.

h(t) = (2^{r-r/p}(1+t^p)^{r/p} - (1+t)^r) / (1-t)^r on [0, 1) is the objective whose infimum is C_{p,r}.
All array work is done in numpy long double, which is 80-bit extended precision on x86 Linux and plain
double elsewhere.
"""

import math

import numpy as np

from wpc.utils.constants import BOUNDARY_DELTA
from wpc.utils.params import DomainError, UnsupportedDomain, ensure_constant

_LN2 = np.log(np.longdouble(2))


def _check_t(t):
    t = float(t)
    if not (0.0 <= t < 1.0):
        raise DomainError("t must lie in [0, 1), received {}".format(t))
    return t


def _check_grid(ts):
    ts = np.asarray(ts, dtype=np.float64)
    if ts.size and (not np.all(np.isfinite(ts)) or ts.min() < 0.0 or ts.max() >= 1.0):
        raise DomainError("every t must lie in [0, 1)")
    return ts


def _power(t, exponent):
    # t ** exponent with 0 ** exponent = 0 for exponent > 0
    with np.errstate(divide="ignore"):
        logs = np.log(t)
    return np.where(t > 0, np.exp(exponent * logs), np.longdouble(0))


def _log_holder_ratio(p, r, t):
    # log(2^{r-r/p}(1+t^p)^{r/p} / (1+t)^r) written with 1+t = 2(1-eps/2) and 1+t^p = 2(1-m/2), where
    # eps = 1-t and m = 1-t^p, so the ln 2 terms cancel before rounding
    eps = 1 - t
    with np.errstate(divide="ignore"):
        m = -np.expm1(p * np.log1p(-eps))
    return (r / p) * np.log1p(-m / 2) - r * np.log1p(-eps / 2)


def _h_raw(params, ts):
    t = np.asarray(ts, dtype=np.longdouble)
    p = np.longdouble(params.p)
    r = np.longdouble(params.r)
    with np.errstate(divide="ignore"):
        log_scale = r * (np.log1p(t) - np.log1p(-t))
    return np.exp(log_scale) * np.expm1(_log_holder_ratio(p, r, t))


def _g_raw(params, ts):
    t = np.asarray(ts, dtype=np.longdouble)
    p = np.longdouble(params.p)
    r = np.longdouble(params.r)
    # r / q with the float conjugate, so that r == q makes g(0) exactly 0
    r_over_q = r / np.longdouble(params.q)
    first = np.exp(r_over_q * _LN2 + (r / p - 1) * np.log1p(_power(t, p))) * (1 + _power(t, p - 1))
    second = 2 * np.exp((r - 1) * np.log1p(t))
    return first - second


def series_h(params, eps):
    """
    series_h evaluates the leading term of h at t = 1 - eps: 2^r (r(p-1)/8) eps^{2-r}, which is exactly
    p - 1 when r = 2.
    :param params: The exponent pair
    :param eps: The distance 1 - t, eps > 0
    :return: The leading series value
    """
    if params.r == 2.0:
        return params.p - 1.0
    return 2.0 ** params.r * (params.r * (params.p - 1.0) / 8.0) * eps ** (2.0 - params.r)


def eval_h_grid(params, ts):
    """
    eval_h_grid evaluates h at every point of ts. Points beyond 1 - BOUNDARY_DELTA use series_h instead of
    the cancelling quotient.
    :param params: The exponent pair
    :param ts: Array-like of t values in [0, 1)
    :return: numpy float64 array of h values
    """
    ts = _check_grid(ts)
    values = _h_raw(params, ts).astype(np.float64)
    near_one = ts > 1.0 - BOUNDARY_DELTA
    if np.any(near_one):
        values[near_one] = [series_h(params, 1.0 - t) for t in ts[near_one]]
    return values


def eval_h(params, t):
    """
    eval_h evaluates h(t) for 0 <= t < 1.
    :param params: The exponent pair
    :param t: The point of evaluation
    :return: h(t) as a float
    """
    t = _check_t(t)
    if t > 1.0 - BOUNDARY_DELTA:
        return series_h(params, 1.0 - t)
    return float(_h_raw(params, t))


def h_prime_sign_factor(params, t):
    """
    h_prime_sign_factor returns g(t) = 2^{r/q}(1+t^p)^{r/p-1}(1+t^{p-1}) - 2(1+t)^{r-1}. The derivative of
    h is r(1-t)^{r-1} g(t) / (1-t)^{2r}, so g carries its sign.
    """
    t = _check_t(t)
    return float(_g_raw(params, t))


def sign_factor_grid(params, ts):
    return _g_raw(params, _check_grid(ts)).astype(np.float64)


def sign_factor_slope(params, t):
    """
    sign_factor_slope is dg/dt, used for Newton steps on g. It is infinite at t = 0 when p < 2.
    """
    p, r, q = params.p, params.r, params.q
    if t <= 0.0:
        return math.inf
    tp = t ** p
    inner = (r / p - 1.0) * p * t ** (p - 1.0) * (1.0 + tp) ** (r / p - 2.0) * (1.0 + t ** (p - 1.0))
    inner += (p - 1.0) * t ** (p - 2.0) * (1.0 + tp) ** (r / p - 1.0)
    return 2.0 ** (r / q) * inner - 2.0 * (r - 1.0) * (1.0 + t) ** (r - 2.0)


def h_prime(params, t):
    """The full derivative dh/dt = r g(t) (1-t)^{-r-1}."""
    t = _check_t(t)
    return params.r * h_prime_sign_factor(params, t) * (1.0 - t) ** (-params.r - 1.0)


def dh_dr(params, t):
    """
    dh_dr is the derivative of h with respect to the law exponent r, at fixed p and t. It is nonnegative
    when 1 < p <= 2 <= r <= q.
    """
    t = _check_t(t)
    p = np.longdouble(params.p)
    r = np.longdouble(params.r)
    t_ld = np.longdouble(t)
    log_scale = (1 - 1 / p) * _LN2 + np.log1p(_power(t_ld, p)) / p
    a = np.exp(r * log_scale)
    b = np.exp(r * np.log1p(t_ld))
    numerator = a * log_scale - b * np.log1p(t_ld) - (a - b) * np.log1p(-t_ld)
    return float(numerator / np.exp(r * np.log1p(-t_ld)))


def holder_gap(params, t):
    """
    holder_gap returns 2^{r-r/p}(1+t^p)^{r/p} - (1+t)^r, the numerator of h. Hölder's inequality makes it
    nonnegative, vanishing only at t = 1.
    """
    t = float(t)
    if not (0.0 <= t <= 1.0):
        raise DomainError("t must lie in [0, 1], received {}".format(t))
    p = np.longdouble(params.p)
    r = np.longdouble(params.r)
    t_ld = np.longdouble(t)
    return float(np.exp(r * np.log1p(t_ld)) * np.expm1(_log_holder_ratio(p, r, t_ld)))


def limit_h_at_one(params):
    """
    limit_h_at_one returns lim h(t) as t -> 1-: p - 1 for r = 2 and +inf for r > 2.
    :raises UnsupportedDomain: for r < 2
    """
    if params.r < 2.0:
        raise UnsupportedDomain("the limit of h at t = 1 is only defined here for r >= 2")
    if params.r == 2.0:
        return params.p - 1.0
    return math.inf


def eval_k(params, C, t):
    """
    eval_k evaluates k(t) = 2^{r-r/p}(1+|t|^p)^{r/p} - |1+t|^r - C|1-t|^r for any real t. It is the
    two point defect at u = 1, v = t.
    :raises DomainError: unless C is finite and positive
    """
    return two_point_defect(params, C, 1.0, t)


def two_point_defect(params, C, u, v):
    """
    two_point_defect returns 2^{r-r/p}(|u|^p+|v|^p)^{r/p} - |u+v|^r - C|u-v|^r. It is nonnegative for
    every real u, v when C <= C_{p,r} and 1 < p <= 2 <= r <= q. Powers are taken through exp and log in
    long double.
    :param params: The exponent pair
    :param C: The constant under test
    :param u: First real argument
    :param v: Second real argument
    :return: The defect
    :raises DomainError: unless C is finite and positive
    """
    C = np.longdouble(ensure_constant(C))
    p = np.longdouble(params.p)
    r = np.longdouble(params.r)
    u = np.longdouble(float(u))
    v = np.longdouble(float(v))
    mass = _power(np.abs(u), p) + _power(np.abs(v), p)
    first = np.exp((r - r / p) * _LN2) * _power(mass, r / p)
    return float(first - _power(np.abs(u + v), r) - C * _power(np.abs(u - v), r))
