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

import numpy as np

from wpc.kernel.search import golden_section
from wpc.utils.constants import BJ_T_TOL, MAX_REFINEMENTS, ORTHOGONALITY_TOL
from wpc.utils.params import DomainError, Law, NonConvergence, OrthogonalityPreconditionError, ensure_exponent
from wpc.vectors.lp_vector import LpVector, row_norms

logger = logging.getLogger("wpc.vectors")

MAX_EXPANSIONS = 64


def norming_direction(x):
    """
    norming_direction returns phi_i = sgn(x_i)|x_i|^{p-1} of x scaled to largest magnitude 1. In l^p,
    1 < p < inf, x is Birkhoff-James orthogonal to y exactly when sum(y_i phi_i) = 0.
    """
    if x.is_zero():
        raise DomainError("the norming direction of the zero vector is undefined")
    scaled = x.coords / np.abs(x.coords).max()
    return np.sign(scaled) * np.abs(scaled) ** (x.exponent - 1.0)


def bj_project(x, z):
    """
    bj_project removes from z the multiple of x seen by the norming functional of x, leaving a vector
    Birkhoff-James orthogonal to x.
    :param x: Nonzero LpVector
    :param z: LpVector compatible with x
    :return: z - c x with c = <z, phi> / <x, phi>
    :raises DomainError: when x is zero
    """
    x.ensure_compatible(z)
    phi = norming_direction(x)
    c = float(np.dot(z.coords, phi) / np.dot(x.coords, phi))
    coords = z.coords - c * x.coords
    # rounding residue, e.g. the whole of y in dimension one
    residue = 4.0 * np.finfo(np.float64).eps * (np.abs(z.coords) + np.abs(c * x.coords))
    coords[np.abs(coords) <= residue] = 0.0
    return LpVector(x.exponent, coords)


def _bracket(f):
    lo, mid, hi = -1.0, 0.0, 1.0
    f_mid = f(mid)
    for _ in range(MAX_EXPANSIONS):
        f_lo, f_hi = f(lo), f(hi)
        if f_lo >= f_mid and f_hi >= f_mid:
            return lo, hi
        if f_hi < f_mid:
            lo, mid, hi = mid, hi, hi + 2.0 * (hi - mid)
            f_mid = f_hi
        else:
            lo, mid, hi = lo - 2.0 * (mid - lo), lo, mid
            f_mid = f_lo
    raise NonConvergence("could not bracket the minimum of |x + ty|",
                         diagnostics={"bracket": (lo, hi), "iterations": MAX_EXPANSIONS})


def bj_violation(x, y):
    """
    bj_violation returns max(0, |x| - inf_t |x + ty|), zero exactly when x is Birkhoff-James orthogonal
    to y. Both vectors are normalised first; t -> |x + ty| is convex, so an expanding bracket followed by
    golden-section finds the global infimum.
    :param x: LpVector
    :param y: LpVector compatible with x
    :return: The violation, in the units of |x|
    """
    x.ensure_compatible(y)
    norm_x = x.norm()
    norm_y = y.norm()
    if norm_x == 0.0 or norm_y == 0.0:
        return 0.0
    unit_x = x.coords / norm_x
    unit_y = y.coords / norm_y
    p = x.exponent

    def f(t):
        return float(row_norms(unit_x + t * unit_y, p))

    lo, hi = _bracket(f)
    search = golden_section(f, lo, hi, BJ_T_TOL, MAX_REFINEMENTS)
    if not search.converged:
        raise NonConvergence("golden-section on |x + ty| did not converge",
                             diagnostics={"bracket": (search.lo, search.hi), "iterations": search.iterations})
    logger.debug("inf |x + ty| = %r at t=%r after %d iterations", search.value, search.t, search.iterations)
    return norm_x * max(0.0, 1.0 - min(search.value, f(0.0)))


def pythagorean_defect(x, y, r, K, kind):
    """
    pythagorean_defect checks the Pythagorean inequality for Birkhoff-James orthogonal x, y. LWP kind
    returns |x+y|^r - |x|^r - K|y|^r, UWP kind returns |x|^r + K|y|^r - |x+y|^r. With K = C/(2^{r-1} - 1)
    and C the law constant of the space both are nonnegative.
    :raises OrthogonalityPreconditionError: if bj_violation(x, y) exceeds ORTHOGONALITY_TOL |x|
    """
    x.ensure_compatible(y)
    r = ensure_exponent("r", r)
    kind = Law(kind)
    violation = bj_violation(x, y)
    if violation > ORTHOGONALITY_TOL * x.norm():
        raise OrthogonalityPreconditionError(
            "x is not Birkhoff-James orthogonal to y, violation {!r}".format(violation), violation)
    total = (x + y).norm() ** r
    separate = x.norm() ** r + K * y.norm() ** r
    if kind is Law.LWP:
        return total - separate
    return separate - total


def pythagorean_constant(C, r):
    """The Pythagorean constant K = C/(2^{r-1} - 1) attached to an r-law with constant C."""
    return C / (2.0 ** (r - 1.0) - 1.0)
