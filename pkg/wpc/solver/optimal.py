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
from collections import OrderedDict
from dataclasses import dataclass, field
from enum import Enum
from typing import NamedTuple, Optional

import numpy as np

from wpc.kernel.scalar import eval_h, eval_h_grid, h_prime_sign_factor, sign_factor_slope
from wpc.kernel.search import golden_section, newton_bisection, scan_grid
from wpc.solver.classify import ConstantForm, classify
from wpc.utils.constants import GOLDEN_WIDTH, MAX_NEWTON_STEPS, MAX_REFINEMENTS, T_TOL
from wpc.utils.constants import result_achieved_tol, result_argmin_t, result_convention, result_dual_values, \
    result_iterations, result_law, result_lower_bound, result_method, result_p, result_q, result_r, \
    result_r_prime, result_upper_bound, result_value
from wpc.utils.params import DomainError, DualConvention, Law, NonConvergence, Params, ensure_constant, \
    ensure_exponent

logger = logging.getLogger("wpc.solver")


class Method(Enum):
    CLOSED_FORM = "ClosedForm"
    GRID_GOLDEN_NEWTON = "GridGoldenNewton"
    DUAL_POWER = "DualPower"
    UNIT = "Unit"


@dataclass
class ConstantResult:
    """
    ConstantResult is a computed weak parallelogram constant. argmin_t is the minimiser of h on [0, 1),
    with 1 standing for a boundary limit; for dual constants it is the minimiser of the base problem.
    """
    params: Params
    law: Law
    value: float
    argmin_t: Optional[float]
    lower_bound: float
    upper_bound: float
    method: Method
    iterations: int = 0
    achieved_tol: float = 0.0
    convention: Optional[DualConvention] = None
    dual_values: dict = field(default_factory=OrderedDict)

    def to_dict(self):
        result = OrderedDict()
        result[result_p] = self.params.p
        result[result_r] = self.params.r
        result[result_q] = self.params.q
        result[result_r_prime] = self.params.r_prime
        result[result_law] = self.law
        result[result_convention] = self.convention
        result[result_value] = self.value
        result[result_argmin_t] = self.argmin_t
        result[result_lower_bound] = self.lower_bound
        result[result_upper_bound] = self.upper_bound
        result[result_method] = self.method
        result[result_iterations] = self.iterations
        result[result_achieved_tol] = self.achieved_tol
        if self.dual_values:
            result[result_dual_values] = self.dual_values
        return result


class DualLaw(NamedTuple):
    exponent: float
    law: Law
    constant: float


def constant_bounds(p, r):
    """
    constant_bounds returns (p-1)^{r/2} <= C_{p,r} <= 2^{r/q} - 1. The upper bound is h(0).
    :raises DomainError: unless 1 < p <= 2 <= r <= q
    """
    params = Params(p, r)
    if not params.in_minimized_range():
        raise DomainError("bounds need 1 < p <= 2 <= r <= q, received p={} r={}".format(params.p, params.r))
    return (params.p - 1.0) ** (params.r / 2.0), 2.0 ** (params.r / params.q) - 1.0


def minimize_h(p, r, tol=T_TOL):
    """
    minimize_h computes C_{p,r} = inf h(t) over [0, 1).

    r = 2 short-circuits to the closed form p - 1, attained in the limit t -> 1. Otherwise a grid scan
    brackets the global minimum, golden-section narrows the bracket and Newton steps on the sign factor g
    (with bisection fallback) polish the minimiser.

    :param p: Lebesgue exponent, 1 < p <= 2
    :param r: Law exponent, 2 <= r <= q
    :param tol: Tolerance on the minimiser
    :return: ConstantResult
    :raises DomainError: outside the lower law region
    :raises NonConvergence: when the refinement cap is exhausted
    """
    params = Params(p, r)
    if not params.in_minimized_range():
        raise DomainError("C_{{p,r}} is defined for 1 < p <= 2 <= r <= q, received p={} r={}".format(
            params.p, params.r))
    if not (tol > 0.0):
        raise DomainError("tol must be positive, received {}".format(tol))
    lower, upper = constant_bounds(params.p, params.r)

    if params.r == 2.0:
        return ConstantResult(params, Law.LWP, params.p - 1.0, 1.0, lower, upper, Method.CLOSED_FORM)

    grid = scan_grid()
    values = eval_h_grid(params, grid)
    index = int(np.argmin(values))
    logger.debug("grid minimum of h at t=%r (index %d of %d) for p=%r r=%r",
                 grid[index], index, len(grid), params.p, params.r)

    if index == 0 and h_prime_sign_factor(params, 0.0) >= 0.0:
        return ConstantResult(params, Law.LWP, float(values[0]), 0.0, lower, upper,
                              Method.GRID_GOLDEN_NEWTON, iterations=0, achieved_tol=0.0)
    if index == len(grid) - 1:
        logger.warning("grid minimum of h sits on the right end t=%r for p=%r r=%r",
                       grid[index], params.p, params.r)

    lo = float(grid[max(index - 1, 0)])
    hi = float(grid[min(index + 1, len(grid) - 1)])

    def h(t):
        return eval_h(params, t)

    golden = golden_section(h, lo, hi, GOLDEN_WIDTH, MAX_REFINEMENTS)
    if not golden.converged:
        raise NonConvergence("golden-section search did not converge",
                             diagnostics={"bracket": (golden.lo, golden.hi), "iterations": golden.iterations})
    iterations = golden.iterations
    best_t, best_value = golden.t, golden.value
    achieved = golden.hi - golden.lo

    def g(t):
        return h_prime_sign_factor(params, t)

    def g_slope(t):
        return sign_factor_slope(params, t)

    if g(golden.lo) < 0.0 < g(golden.hi):
        newton = newton_bisection(g, g_slope, golden.lo, golden.hi, tol, MAX_NEWTON_STEPS)
        iterations += newton.iterations
        if not newton.converged:
            raise NonConvergence("Newton refinement of the minimiser did not converge",
                                 diagnostics={"bracket": (newton.lo, newton.hi), "iterations": iterations,
                                              "last": newton.t})
        newton_value = h(newton.t)
        if newton_value < best_value or (newton_value == best_value and best_t > 0.0):
            best_t, best_value = newton.t, newton_value
        achieved = min(achieved, max(newton.hi - newton.lo, 0.0))
    else:
        logger.debug("sign factor does not change sign on [%r, %r], keeping the golden-section minimiser",
                     golden.lo, golden.hi)

    if iterations > MAX_REFINEMENTS:
        raise NonConvergence("refinement cap of {} exceeded".format(MAX_REFINEMENTS),
                             diagnostics={"iterations": iterations, "last": best_t})
    if best_value < lower:
        logger.warning("minimised h %r at t=%r fell below the lower bound %r for p=%r r=%r, using the bound",
                       best_value, best_t, lower, params.p, params.r)
        best_value = lower
    return ConstantResult(params, Law.LWP, best_value, best_t, lower, upper, Method.GRID_GOLDEN_NEWTON,
                          iterations=iterations, achieved_tol=achieved)


def dual_exponent(params, convention):
    """The power applied to the base constant C_{q,r'} under each convention."""
    if convention is DualConvention.PAPER:
        return -params.p / params.q
    return -params.r / params.r_prime


def dual_power_constant(p, r, convention=DualConvention.PAPER, tol=T_TOL):
    """
    dual_power_constant computes the upper law constant for p >= 2, q <= r <= 2 from the base constant
    C_{q,r'}. Both conventions are always evaluated and reported in dual_values.
    """
    params = Params(p, r)
    base = minimize_h(params.q, params.r_prime, tol)
    dual_values = OrderedDict()
    for candidate in DualConvention:
        dual_values[candidate.value] = base.value ** dual_exponent(params, candidate)
    exponent = dual_exponent(params, convention)
    return ConstantResult(params, Law.UWP, dual_values[convention.value], base.argmin_t,
                          base.upper_bound ** exponent, base.lower_bound ** exponent, Method.DUAL_POWER,
                          iterations=base.iterations, achieved_tol=base.achieved_tol, convention=convention,
                          dual_values=dual_values)


def optimal_constant(p, r, law, convention=DualConvention.PAPER, tol=T_TOL):
    """
    optimal_constant returns the optimal constant of the requested law at (p, r).
    :param p: Lebesgue exponent
    :param r: Law exponent
    :param law: Law.LWP or Law.UWP
    :param convention: Exponent convention for dual constants
    :param tol: Tolerance passed on to minimize_h
    :return: ConstantResult
    :raises LawNotGranted: if L^p satisfies no such law
    """
    entry = classify(p, r).entry(law)
    params = Params(p, r)
    if entry.form is ConstantForm.UNIT:
        return ConstantResult(params, law, 1.0, None, 1.0, 1.0, Method.UNIT)
    if entry.form is ConstantForm.MINIMIZED_H:
        return minimize_h(params.p, params.r, tol)
    return dual_power_constant(params.p, params.r, convention, tol)


def dual_transform(law_exponent, law, C):
    """
    dual_transform maps an s-law with constant C on a space to the law satisfied by its dual: exponent
    s/(s-1), lower and upper swapped, constant C^{-s'/s}. Applying it twice is the identity.
    """
    exponent = ensure_exponent("law exponent", law_exponent)
    C = ensure_constant(C)
    dual = exponent / (exponent - 1.0)
    return DualLaw(dual, law.flipped(), C ** (-dual / exponent))


def conjugate_boundary_deviation(p, tol=T_TOL):
    """
    conjugate_boundary_deviation returns C_{p,q} - 1, the gap between the minimised constant at r = q and
    the unit constant of the neighbouring region.
    """
    params = Params(p, 2.0)
    if params.p > 2.0:
        raise DomainError("p must be at most 2, received {}".format(params.p))
    return minimize_h(params.p, params.q, tol).value - 1.0
