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

import math
from dataclasses import dataclass

import numpy as np

from wpc.utils.constants import BOUNDARY_DELTA, GRID_POINTS

PHI_RATIO = 2.0 / (1.0 + math.sqrt(5.0))


@dataclass
class SearchResult:
    t: float
    value: float
    lo: float
    hi: float
    iterations: int
    converged: bool


def scan_grid(points=GRID_POINTS, t_max=1.0 - BOUNDARY_DELTA):
    """
    scan_grid builds the bracketing grid on [0, t_max]: half the points uniform, a quarter geometrically
    refined towards 0 and a quarter towards t_max.
    :param points: Total number of points before de-duplication
    :param t_max: The right end of the grid
    :return: Sorted unique numpy array containing both endpoints
    """
    n_uniform = max(points // 2, 2)
    n_geometric = max(points // 4, 2)
    uniform = np.linspace(0.0, t_max, n_uniform)
    near_zero = np.logspace(-12.0, -1.0, n_geometric)
    gap = 1.0 - t_max
    near_end = 1.0 - np.logspace(-1.0, math.log10(gap), n_geometric) if gap < 0.1 else np.empty(0)
    grid = np.unique(np.concatenate([uniform, near_zero, near_end, [0.0, t_max]]))
    return grid[(grid >= 0.0) & (grid <= t_max)]


def golden_section(f, lo, hi, width, max_iterations):
    """
    golden_section minimises f on [lo, hi], assumed unimodal there, until the bracket is narrower than
    width. The endpoints are compared with the interior estimate so a monotone f returns the better end.
    :param f: Scalar function to minimise
    :param lo: Left end of the bracket
    :param hi: Right end of the bracket
    :param width: Target bracket width
    :param max_iterations: Iteration cap
    :return: SearchResult
    """
    lo0, hi0 = lo, hi
    f_lo0, f_hi0 = f(lo), f(hi)
    x1 = hi - PHI_RATIO * (hi - lo)
    x2 = lo + PHI_RATIO * (hi - lo)
    f1 = f(x1)
    f2 = f(x2)
    iteration = 0
    while iteration < max_iterations and abs(hi - lo) > width:
        if f2 > f1:
            hi = x2
            x2, f2 = x1, f1
            x1 = hi - PHI_RATIO * (hi - lo)
            f1 = f(x1)
        else:
            lo = x1
            x1, f1 = x2, f2
            x2 = lo + PHI_RATIO * (hi - lo)
            f2 = f(x2)
        iteration += 1

    if f1 <= f2:
        t, value = x1, f1
    else:
        t, value = x2, f2
    # ties prefer the smaller t
    if f_lo0 <= value:
        t, value = lo0, f_lo0
    elif f_hi0 < value:
        t, value = hi0, f_hi0
    converged = abs(hi - lo) <= width and not (math.isnan(f1) or math.isnan(f2))
    return SearchResult(t, value, lo, hi, iteration, converged)


def newton_bisection(func, slope, lo, hi, tol, max_steps):
    """
    newton_bisection refines a root of func bracketed by lo < hi with func(lo) < 0 < func(hi). A Newton
    step is taken when it stays inside the bracket and shrinks fast enough, otherwise the bracket is
    bisected.
    :param func: Function whose root is wanted
    :param slope: Derivative of func
    :param lo: Left end, func(lo) < 0
    :param hi: Right end, func(hi) > 0
    :param tol: Stop once a step is smaller than tol
    :param max_steps: Step cap
    :return: SearchResult with value = func(t)
    """
    x = 0.5 * (lo + hi)
    dx_old = hi - lo
    dx = dx_old
    f = func(x)
    df = slope(x)
    steps = 0
    converged = False
    while steps < max_steps:
        steps += 1
        newton_ok = math.isfinite(df) and df != 0.0
        if newton_ok:
            candidate = x - f / df
            newton_ok = lo < candidate < hi and abs(2.0 * f) <= abs(dx_old * df)
        dx_old = dx
        if newton_ok:
            dx = f / df
            x = x - dx
        else:
            dx = 0.5 * (hi - lo)
            x = lo + dx
        if abs(dx) < tol or hi - lo < tol:
            converged = True
            f = func(x)
            break
        f = func(x)
        df = slope(x)
        if f == 0.0:
            converged = True
            break
        if f < 0.0:
            lo = x
        else:
            hi = x
    return SearchResult(x, f, lo, hi, steps, converged)
