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
von Neumann-Jordan and James constants of l^p.

Upper bounds come from the weak parallelogram constants:

- (i) a 2-LWP(C) space has C_NJ <= 1/C
- (ii) a 2-UWP(C) space has C_NJ <= C
- (iii) an r-LWP(C) space has J <= 2/(1+C)^{1/r}
- (iv) an r-UWP(C) space has J <= 2^{1-2/r}(1+C)^{1/r} as printed, or J <= (1+C)^{1/r} when the factor 2
  of the substitution is carried through

Lower bounds are empirical: the largest ratio found over seeded random pairs, polished locally.
"""

import logging
from collections import OrderedDict
from dataclasses import dataclass, field, replace
from typing import List, Optional

import numpy as np

from wpc.kernel.search import golden_section
from wpc.solver.optimal import minimize_h, optimal_constant
from wpc.utils.constants import DERIVED_R_STEPS, DERIVED_SLACK, JAMES_DIM, MAX_REFINEMENTS, POLISH_SWEEPS, \
    POLISH_WIDTH, stream_james, stream_nj
from wpc.utils.constants import derived_bound_asserted, derived_bound_constant, derived_bound_part, \
    derived_bound_r, derived_bound_source_law, derived_bound_value, derived_bound_variant, derived_breaches, \
    derived_dim, derived_james_estimate, derived_james_upper_bounds, derived_nj_bounds, derived_nj_estimate, \
    derived_nj_upper_bound, derived_p, derived_samples, derived_seed
from wpc.utils.params import DomainError, DualConvention, Law, Params
from wpc.utils.sampling import sample_pairs
from wpc.vectors.lp_vector import row_norms

logger = logging.getLogger("wpc.derived")


@dataclass(frozen=True)
class DerivedBound:
    part: str
    source_law: Law
    r: float
    constant: float
    bound: float
    asserted: bool = True
    variant: Optional[str] = None

    def to_dict(self):
        result = OrderedDict()
        result[derived_bound_part] = self.part
        result[derived_bound_source_law] = self.source_law
        result[derived_bound_r] = self.r
        result[derived_bound_constant] = self.constant
        result[derived_bound_value] = self.bound
        result[derived_bound_variant] = self.variant
        result[derived_bound_asserted] = self.asserted
        return result


@dataclass(frozen=True)
class DerivedConstantsReport:
    p: float
    nj_upper_bound: Optional[float] = None
    nj_bounds: List[DerivedBound] = field(default_factory=list)
    james_upper_bounds: List[DerivedBound] = field(default_factory=list)
    nj_estimate: Optional[float] = None
    james_estimate: Optional[float] = None
    samples: int = 0
    seed: int = 0
    dim: int = 0

    def breaches(self, slack=DERIVED_SLACK):
        """
        breaches lists the asserted bounds an estimate exceeds by more than slack. Bounds that are not
        asserted are never breaches.
        """
        found = []
        if self.nj_estimate is not None:
            found += [bound for bound in self.nj_bounds
                      if bound.asserted and self.nj_estimate > bound.bound + slack]
        if self.james_estimate is not None:
            found += [bound for bound in self.james_upper_bounds
                      if bound.asserted and self.james_estimate > bound.bound + slack]
        return found

    def consistent(self, slack=DERIVED_SLACK):
        return not self.breaches(slack)

    def to_dict(self):
        result = OrderedDict()
        result[derived_p] = self.p
        result[derived_nj_upper_bound] = self.nj_upper_bound
        result[derived_nj_bounds] = [bound.to_dict() for bound in self.nj_bounds]
        result[derived_james_upper_bounds] = [bound.to_dict() for bound in self.james_upper_bounds]
        result[derived_nj_estimate] = self.nj_estimate
        result[derived_james_estimate] = self.james_estimate
        result[derived_samples] = self.samples
        result[derived_seed] = self.seed
        result[derived_dim] = self.dim
        result[derived_breaches] = [bound.to_dict() for bound in self.breaches()]
        return result


def _lwp_james(r, C, part="iii"):
    return DerivedBound(part, Law.LWP, r, C, 2.0 / (1.0 + C) ** (1.0 / r))


def _uwp_james(r, C):
    printed = DerivedBound("iv", Law.UWP, r, C, 2.0 ** (1.0 - 2.0 / r) * (1.0 + C) ** (1.0 / r),
                           asserted=False, variant="printed")
    factor_two = DerivedBound("iv", Law.UWP, r, C, (1.0 + C) ** (1.0 / r), asserted=False, variant="factor-2")
    return [printed, factor_two]


def nj_james_bounds(p, r_steps=DERIVED_R_STEPS):
    """
    nj_james_bounds derives the upper bounds on C_NJ and J for l^p.

    For p <= 2 the NJ bound is 1/C_{p,2} = 1/(p-1), the James bounds run (iii) over r in [2, q] with
    C_{p,r}, and (iv) uses the unit UWP law at r = p. For p > 2 the NJ bound uses the 2-UWP constant under
    both dual conventions (the smaller becomes njUpperBound), (iii) uses the unit LWP laws for r >= p and
    (iv) the unit UWP law at r = q. Bounds from (iv) are reported, never asserted.

    :param p: Lebesgue exponent
    :param r_steps: Number of r values in each James grid
    :return: DerivedConstantsReport without estimates
    """
    params = Params(p, 2.0)
    p, q = params.p, params.q
    if p <= 2.0:
        lwp = minimize_h(p, 2.0)
        nj_bounds = [DerivedBound("i", Law.LWP, 2.0, lwp.value, 1.0 / lwp.value)]
        james = [_lwp_james(r, minimize_h(p, r).value) for r in np.linspace(2.0, q, r_steps)]
        james += _uwp_james(p, 1.0)
    else:
        uwp = optimal_constant(p, 2.0, Law.UWP)
        nj_bounds = []
        for convention in DualConvention:
            constant = uwp.dual_values.get(convention.value, uwp.value)
            nj_bounds.append(DerivedBound("ii", Law.UWP, 2.0, constant, constant, variant=convention.value))
        james = [_lwp_james(r, 1.0) for r in np.linspace(p, 2.0 * p, r_steps)]
        james += _uwp_james(q, 1.0)
    nj_upper = min(bound.bound for bound in nj_bounds)
    logger.debug("p=%r: C_NJ <= %r, %d James bounds", p, nj_upper, len(james))
    return DerivedConstantsReport(p, nj_upper, nj_bounds, james)


def nj_ratios(xs, ys, p):
    """
    nj_ratios returns max(rho, 1/rho) with rho = (|x+y|^2 + |x-y|^2) / (2(|x|^2 + |y|^2)) for each row pair.
    Pairs that are both zero give 1.
    """
    denominator = 2.0 * (row_norms(xs, p) ** 2 + row_norms(ys, p) ** 2)
    numerator = row_norms(xs + ys, p) ** 2 + row_norms(xs - ys, p) ** 2
    valid = denominator > 0.0
    rho = np.where(valid, numerator / np.where(valid, denominator, 1.0), 1.0)
    return np.maximum(rho, 1.0 / rho)


def james_ratios(xs, ys, p):
    """
    james_ratios returns min(|x+y|, |x-y|) after scaling each vector onto the unit sphere. Pairs with a
    zero vector give 0.
    """
    norm_x = row_norms(xs, p)
    norm_y = row_norms(ys, p)
    valid = (norm_x > 0.0) & (norm_y > 0.0)
    unit_x = xs / np.where(norm_x > 0.0, norm_x, 1.0)[:, None]
    unit_y = ys / np.where(norm_y > 0.0, norm_y, 1.0)[:, None]
    values = np.minimum(row_norms(unit_x + unit_y, p), row_norms(unit_x - unit_y, p))
    return np.where(valid, values, 0.0)


def nj_estimate_from_pairs(xs, ys, p):
    """nj_estimate_from_pairs returns the largest NJ ratio and the row attaining it."""
    values = nj_ratios(xs, ys, p)
    index = int(np.argmax(values))
    return float(values[index]), index


def james_estimate_from_pairs(xs, ys, p):
    values = james_ratios(xs, ys, p)
    index = int(np.argmax(values))
    return float(values[index]), index


def record_indices(values):
    """record_indices returns, in order, the indices at which the running maximum strictly increases."""
    values = np.asarray(values)
    if values.size == 0:
        return []
    running = np.maximum.accumulate(values)
    previous = np.concatenate([[-np.inf], running[:-1]])
    return [int(index) for index in np.flatnonzero(values > previous)]


def polish_pair(ratios, x, y, p, sweeps=POLISH_SWEEPS):
    """
    polish_pair raises ratios(x, y) by coordinate-wise golden-section over the coordinates of both vectors.
    A move is kept only if it improves the value, so the result is never below the starting value.
    :param ratios: One of nj_ratios or james_ratios
    :param x: Coordinates of the first vector
    :param y: Coordinates of the second vector
    :param p: Norm exponent
    :param sweeps: Passes over all coordinates, the search width halving after each
    :return: The polished value
    """
    dim = len(x)
    z = np.concatenate([x, y]).astype(np.float64)

    def objective(w):
        return float(ratios(w[None, :dim], w[None, dim:], p)[0])

    best = objective(z)
    width = POLISH_WIDTH * float(np.abs(z).max())
    if width == 0.0:
        return best
    for _ in range(sweeps):
        for index in range(z.size):
            def negated(value):
                trial = z.copy()
                trial[index] = value
                return -objective(trial)

            search = golden_section(negated, z[index] - width, z[index] + width, width * 1e-9, MAX_REFINEMENTS)
            if -search.value > best:
                z[index] = search.t
                best = -search.value
        width *= 0.5
    return best


def _estimate(ratios, xs, ys, p, polish):
    values = ratios(xs, ys, p)
    estimate = float(values.max()) if values.size else 0.0
    if polish:
        for index in record_indices(values):
            estimate = max(estimate, polish_pair(ratios, xs[index], ys[index], p))
    return estimate


def empirical_constants(p, dim, samples, seed, workers=1, polish=True):
    """
    empirical_constants estimates C_NJ and J of l^p from below. Record setting samples are polished; the
    estimate is the maximum over raw samples and polished records, which makes it nondecreasing in the
    sample count for a fixed seed. The James search runs on 2-dimensional sections.
    :param p: Lebesgue exponent
    :param dim: Dimension of the NJ samples, at least 2
    :param samples: Number of pairs, at least 1
    :param seed: 64-bit unsigned seed
    :param workers: Threads used for sampling
    :param polish: Whether to polish record setting samples
    :return: DerivedConstantsReport with estimates only
    """
    params = Params(p, 2.0)
    if dim < 2:
        raise DomainError("dim must be at least 2, received {}".format(dim))
    if samples < 1:
        raise DomainError("samples must be at least 1, received {}".format(samples))
    xs, ys = sample_pairs(seed, stream_nj, samples, dim, workers)
    nj = _estimate(nj_ratios, xs, ys, params.p, polish)
    xs, ys = sample_pairs(seed, stream_james, samples, JAMES_DIM, workers)
    james = _estimate(james_ratios, xs, ys, params.p, polish)
    logger.debug("p=%r: C_NJ >= %r, J >= %r from %d samples", params.p, nj, james, samples)
    return DerivedConstantsReport(params.p, nj_estimate=nj, james_estimate=james, samples=samples, seed=seed,
                                  dim=dim)


def derived_constants(p, dim, samples, seed, workers=1):
    """derived_constants combines nj_james_bounds and empirical_constants into one report."""
    estimates = empirical_constants(p, dim, samples, seed, workers)
    return replace(nj_james_bounds(p), nj_estimate=estimates.nj_estimate,
                   james_estimate=estimates.james_estimate, samples=samples, seed=seed, dim=dim)
